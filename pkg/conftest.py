import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "mesplab.settings")
django.setup()
