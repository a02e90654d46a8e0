"""
URL configuration for the mesplab project.

Only the eccentricity app is mounted; it carries its own router.
"""
from django.urls import path, include

urlpatterns = [
    path('api/v1/eccentricity/', include('eccentricity.urls')),
]
