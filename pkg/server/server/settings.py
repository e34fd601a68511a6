import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

# Load .env once so SYLLOGISM_* overrides work without exporting them
try:
    from dotenv import load_dotenv  # type: ignore[import-not-found]
    load_dotenv(BASE_DIR / '.env')
except Exception:
    pass

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'dev-secret-key')
DEBUG = os.environ.get('DJANGO_DEBUG', 'true').lower() in ('1', 'true', 'yes')
ALLOWED_HOSTS = ['*']

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'engine',
    'syllogism',
]

MIDDLEWARE = []

# Nothing is persisted; every result is recomputed from the premises.
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}

SYLLOGISM = {
    'EPSILON': os.environ.get('SYLLOGISM_EPSILON', '1/100'),
    'STABILITY_EPSILON': os.environ.get('SYLLOGISM_STABILITY_EPSILON', '1/1000'),
    'FORMAT': os.environ.get('SYLLOGISM_FORMAT', 'text'),
    'JOBS': os.environ.get('SYLLOGISM_JOBS', 'auto'),
}

LOG_LEVEL = os.environ.get('SYLLOGISM_LOG_LEVEL', 'WARNING').upper()

# stdout carries rendered results only
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'engine': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'syllogism': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
