from django.apps import AppConfig


class WellfoundedConfig(AppConfig):
    name = 'wellfounded'
    verbose_name = 'Descending chains and bounded well-foundedness search'
