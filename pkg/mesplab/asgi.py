"""
ASGI entry point for the mesplab analysis service.

Serves the eccentricity API; the same operations are available offline through
``manage.py`` commands.
"""

import os

from django.core.asgi import get_asgi_application
from dotenv import load_dotenv

load_dotenv()
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'mesplab.settings')

application = get_asgi_application()
