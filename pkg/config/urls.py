from django.urls import path, include
from django.http import JsonResponse


def api_status(request):
    return JsonResponse({
        'status': 'online',
        'message': 'Skewalg API is running',
        'endpoints': {
            'spectrum_report': '/api/spectra/report/',
        }
    })


urlpatterns = [
    path('api/status/', api_status, name='api_status'),
    path('api/spectra/', include('spectra.urls')),
]
