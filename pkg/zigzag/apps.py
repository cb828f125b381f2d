from django.apps import AppConfig


class ZigzagConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'zigzag'
    verbose_name = 'Zigzag cycles'
