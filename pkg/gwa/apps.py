from django.apps import AppConfig


class GwaConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'gwa'
