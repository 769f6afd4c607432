from django.apps import AppConfig


class AmbiskewConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ambiskew'
