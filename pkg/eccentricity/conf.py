from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "MESP_EXACT_MAX_N": 15,
    "MESP_PATH_CAP": 100_000,
    "MESP_SPREAD_CAP": 10_000,
    "MESP_RECURSION_LIMIT": 8,
}


def get_setting(name):
    """
    Read an eccentricity tunable from Django settings.
    Falls back to DEFAULTS when the library is used without a configured project.
    """
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]


def resolve(value, name):
    return get_setting(name) if value is None else value
