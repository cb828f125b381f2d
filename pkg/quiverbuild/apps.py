from django.apps import AppConfig


class QuiverbuildConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'quiverbuild'
    verbose_name = 'Gabriel quivers'
