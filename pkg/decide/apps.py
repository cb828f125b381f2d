from django.apps import AppConfig


class DecideConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'decide'
    verbose_name = 'Verdicts'
