from django.apps import AppConfig


class CharfieldConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'charfield'
    verbose_name = 'Characters and splitting fields'
