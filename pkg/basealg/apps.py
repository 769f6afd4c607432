from django.apps import AppConfig


class BasealgConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'basealg'
