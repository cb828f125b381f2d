"""
Django settings for tautilt_platform project.

The project has no URL configuration: everything is driven through
management commands (see the ``cli`` app).
"""

from pathlib import Path
import os
import dj_database_url

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = os.getenv('SECRET_KEY', 'tautilt-insecure-local-key')  # fallback for local runs

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Custom apps
    'core',
    'abgroup',
    'action',
    'charfield',
    'quiverbuild',
    'zigzag',
    'decide',
    'repcheck',
    'cli',
]


# Database

DATABASES = {
    'default': dj_database_url.config(
        default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}",
        conn_max_age=0,
    )
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True

TIME_ZONE = 'UTC'


# Toolkit limits

TAUTILT_MAX_GROUP_ORDER = int(os.getenv('TAUTILT_MAX_GROUP_ORDER', 2 ** 63))
TAUTILT_ORACLE_MAX_ORDER = int(os.getenv('TAUTILT_ORACLE_MAX_ORDER', 256))
TAUTILT_ISO_SEARCH_CAP = int(os.getenv('TAUTILT_ISO_SEARCH_CAP', 2 ** 20))
TAUTILT_BRICK_SEARCH_CAP = int(os.getenv('TAUTILT_BRICK_SEARCH_CAP', 2 ** 24))
TAUTILT_DEFAULT_FIELD_Q = int(os.getenv('TAUTILT_DEFAULT_FIELD_Q', 4))
TAUTILT_LOG_LEVEL = os.getenv('TAUTILT_LOG_LEVEL', 'INFO')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': TAUTILT_LOG_LEVEL,
            'propagate': False,
        }
        for app in [
            'core', 'abgroup', 'action', 'charfield', 'quiverbuild',
            'zigzag', 'decide', 'repcheck', 'cli',
        ]
    },
}
