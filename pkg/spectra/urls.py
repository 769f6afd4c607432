from django.urls import path
from . import views

app_name = 'spectra'

urlpatterns = [
    path('report/', views.api_spectrum_report, name='api_spectrum_report'),
]
