"""
Django settings for config project.

Django hosts the busbar management command, the config forms and the test
runner. There is no database and nothing is served.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import app_config
import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Nothing is signed; Django only requires the setting to be non-empty
SECRET_KEY = 'busbar-forces-not-secret'

DEBUG = app_config.DEBUG

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'busbar.apps.BusbarConfig',
]

DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True
