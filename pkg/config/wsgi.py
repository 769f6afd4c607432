"""
Aplicación WSGI de skewalg, servida con gunicorn:

    gunicorn config.wsgi:application --bind 0.0.0.0:8000

https://docs.djangoproject.com/en/4.2/howto/deployment/wsgi/
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

application = get_wsgi_application()
