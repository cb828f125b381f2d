from django.apps import AppConfig


class RepcheckConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'repcheck'
    verbose_name = 'Representation oracle'
