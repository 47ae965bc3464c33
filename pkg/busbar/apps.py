from django.apps import AppConfig


class BusbarConfig(AppConfig):
    name = 'busbar'
    verbose_name = 'Busbar forces'
