import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
django.setup()

# Mirror `manage.py test`: Django's runner installs the test environment
# (e.g. ALLOWED_HOSTS += 'testserver') before running any test.
from django.test.utils import setup_test_environment  # noqa: E402

setup_test_environment()
