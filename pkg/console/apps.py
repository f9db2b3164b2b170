from django.apps import AppConfig


class ConsoleConfig(AppConfig):
    name = 'console'
    verbose_name = 'The ordlab command line'
