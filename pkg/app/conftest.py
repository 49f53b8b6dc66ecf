"""Configure Django before pytest collects the test modules.

Mirrors what ``manage.py test`` does: load settings, populate the app
registry and install the test environment (e.g. 'testserver' host).
"""
import os

import django
from django.test.utils import setup_test_environment

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
django.setup()
setup_test_environment()
