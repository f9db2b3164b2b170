from django.apps import AppConfig


class OrdinalLabConfig(AppConfig):
    name = 'ordinal_lab'
