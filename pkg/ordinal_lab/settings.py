"""
Django settings for the ordinal_lab project.

The project has no web surface and no database: Django provides the app
registry, the management command framework (``manage.py ordlab``), logging
configuration and the test runner.
"""

from pathlib import Path
from decouple import config
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='ordinal-lab-insecure-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)


def env_bool(name: str, default: bool = False) -> bool:
    """Parse a boolean from environment variables robustly."""
    val = os.getenv(name)
    if val is None:
        return default
    return str(val).strip().lower() in {"1", "true", "yes", "on"}


INSTALLED_APPS = [
    'rest_framework',
    # Project apps
    'ordinal_lab',
    'ordinals',
    'orders',
    'dilators',
    'wellfounded',
    'console',
]

# Nothing is persisted; every object is an immutable value built on demand.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Desk-scale bounds for validators, searches and enumerations.
# Override any of them with ORDLAB_<NAME> in the environment or a .env file.
ORDLAB = {
    'SIZE_BOUND': config('ORDLAB_SIZE_BOUND', default=6, cast=int),
    'ELEMENT_BOUND': config('ORDLAB_ELEMENT_BOUND', default=50, cast=int),
    'SUPREMUM_SEARCH_BOUND': config('ORDLAB_SUPREMUM_SEARCH_BOUND', default=50, cast=int),
    'CHAIN_WINDOW': config('ORDLAB_CHAIN_WINDOW', default=20, cast=int),
    'CHAIN_COMPARISON_FACTOR': config('ORDLAB_CHAIN_COMPARISON_FACTOR', default=50, cast=int),
    'DEFAULT_SEED': config('ORDLAB_DEFAULT_SEED', default=0, cast=int),
    'MAX_LITERAL': config('ORDLAB_MAX_LITERAL', default=2 ** 32, cast=int),
}

# JSON rendering of reports goes through DRF renderers only; no API is served.
REST_FRAMEWORK = {
    'UNICODE_JSON': True,
    'COMPACT_JSON': False,
}

LOG_LEVEL = config('LOG_LEVEL', default='DEBUG' if DEBUG else 'WARNING').upper()
VERBOSE_LOGS = env_bool('ORDLAB_VERBOSE_LOGS', default=DEBUG)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'verbose' if VERBOSE_LOGS else 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'ordinals': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'orders': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'dilators': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'wellfounded': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'console': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
