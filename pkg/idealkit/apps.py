from django.apps import AppConfig


class IdealkitConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'idealkit'
