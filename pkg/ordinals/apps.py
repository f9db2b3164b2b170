from django.apps import AppConfig


class OrdinalsConfig(AppConfig):
    name = 'ordinals'
    verbose_name = 'Ordinal arithmetic below epsilon_0'
