from django.apps import AppConfig


class AbgroupConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'abgroup'
    verbose_name = 'Abelian p-groups'
