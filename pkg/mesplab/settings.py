"""
Django settings for the mesplab project.

The project hosts one app, ``eccentricity``, which implements the minimum
eccentricity shortest path tooling (library, management commands, HTTP API).
Every algorithm tunable below can be overridden from the environment or a
``.env`` file loaded by ``manage.py``.
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-mesplab-local-analysis-only')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DJANGO_DEBUG', 'true').lower() == 'true'

ALLOWED_HOSTS = ['*']


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'corsheaders',
    'eccentricity',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
    "corsheaders.middleware.CorsMiddleware",
]

ROOT_URLCONF = 'mesplab.urls'

TEMPLATES = []

WSGI_APPLICATION = 'mesplab.wsgi.application'


# The analysis service is stateless; the database is only here because Django
# expects one. No model of the app touches it.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    },
}


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

# Cors Setup
CORS_ALLOW_ALL_ORIGINS = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_RENDERER_CLASSES": (
        'rest_framework.renderers.JSONRenderer',
    ),
}


# Eccentricity tooling

MESP_EXACT_MAX_N = int(os.getenv('MESP_EXACT_MAX_N', 15))
MESP_PATH_CAP = int(os.getenv('MESP_PATH_CAP', 100_000))
MESP_SPREAD_CAP = int(os.getenv('MESP_SPREAD_CAP', 10_000))
MESP_RECURSION_LIMIT = int(os.getenv('MESP_RECURSION_LIMIT', 8))
MESP_LOG_LEVEL = os.getenv('MESP_LOG_LEVEL', 'INFO')

# Reports go to stdout, so log records are kept on stderr.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "eccentricity": {
            "handlers": ["console"],
            "level": MESP_LOG_LEVEL,
            "propagate": False,
        },
    },
}
