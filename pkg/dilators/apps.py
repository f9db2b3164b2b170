from django.apps import AppConfig


class DilatorsConfig(AppConfig):
    name = 'dilators'
    verbose_name = 'Prae-dilators, extensions and upper derivatives'
