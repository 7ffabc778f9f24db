# built in modules
import os

# installed modules
from hypothesis import settings


settings.register_profile('ci', max_examples=200, deadline=None)
settings.register_profile('dev', max_examples=30, deadline=None)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'dev'))
