from django.urls import path, include
from rest_framework.routers import DefaultRouter

from . import views


app_name = "eccentricity"
router = DefaultRouter()
router.register(r'analysis', views.GraphAnalysisViewSet, basename='analysis')

urlpatterns = [
    path('generators/<str:family>/', views.GeneratorView.as_view(), name='generator'),
    path('', include(router.urls)),
]
