from django.apps import AppConfig


class EccentricityConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'eccentricity'
    verbose_name = 'Minimum eccentricity shortest paths'
