"""Settings for bilch: defaults, JSON config files, environment
variables and keyword arguments, in increasing order of precedence."""

# built in modules
import os

# project modules
from . import commentjson
from .core import Bunch, merge_dicts


DEFAULT_CONFIG_PATH = os.path.join(os.path.expanduser('~'), '.bilch')

DEFAULTS = {
    'cap': 24,
    'workers': 1,
    'method': 'witness',
    'verbose': False,
}

METHODS = ('witness', 'dimension', 'cross_check')

ENV_VARIABLES = {
    'cap': 'BILCH_CAP',
    'workers': 'BILCH_WORKERS',
    'method': 'BILCH_METHOD',
    'verbose': 'BILCH_VERBOSE',
}


class ConfigError(RuntimeError):
    """Error raised while reading or validating settings"""

    def __init__(self, *args, **kwargs):
        super(ConfigError, self).__init__(*args, **kwargs)


def _as_bool(value):
    if isinstance(value, bool):
        return value
    if str(value).strip().lower() in ('1', 'true', 'yes', 'on'):
        return True
    if str(value).strip().lower() in ('0', 'false', 'no', 'off', ''):
        return False
    raise ConfigError('"{}" is not a boolean'.format(value))


def _as_int(key, value, minimum):
    if isinstance(value, bool):
        raise ConfigError('"{}" must be an integer'.format(key))
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigError(
            '"{}" must be an integer (got "{}")'.format(key, value))
    if value < minimum:
        raise ConfigError('"{}" must be at least {}'.format(key, minimum))
    return value


def normalize_method(value):
    """Accepts the short CLI spelling "cross" for cross_check"""
    method = 'cross_check' if value == 'cross' else value
    if method not in METHODS:
        raise ConfigError(
            'method "{}" not recognized (choose among {})'.format(
                value, ', '.join(METHODS)))
    return method


def _validate(settings):
    unknown = sorted(set(settings) - set(DEFAULTS))
    if unknown:
        raise ConfigError('unknown setting(s): {}'.format(', '.join(unknown)))

    settings['cap'] = _as_int('cap', settings['cap'], 0)
    settings['workers'] = _as_int('workers', settings['workers'], 1)
    settings['method'] = normalize_method(settings['method'])
    settings['verbose'] = _as_bool(settings['verbose'])
    return settings


def get_settings(*config_paths, **overrides):
    """Get the settings for a run.

    Args:
        config_paths (str): JSON files (comments allowed) read in order;
            if none is given, $BILCH_CONFIG or ~/.bilch is used when it
            exists.
        overrides: keyword settings; they have precedence over files
            and environment. None values are ignored.

    Returns:
        settings (Bunch): cap, workers, method and verbose.

    Raises:
        ConfigError: unreadable file, unknown key or invalid value.
    """
    settings = dict(DEFAULTS)

    if not config_paths:
        env_path = os.environ.get('BILCH_CONFIG', None)
        if env_path:
            config_paths = [env_path]
        elif os.path.exists(DEFAULT_CONFIG_PATH):
            config_paths = [DEFAULT_CONFIG_PATH]

    for fp in config_paths:
        try:
            with open(fp) as f:
                loaded = commentjson.load(f)
        except (OSError, ValueError) as e:
            raise ConfigError('cannot read config "{}": {}'.format(fp, e))
        if not isinstance(loaded, dict):
            raise ConfigError('config "{}" is not a JSON object'.format(fp))
        merge_dicts(settings, loaded)

    for key, env_name in ENV_VARIABLES.items():
        if env_name in os.environ:
            settings[key] = os.environ[env_name]

    # arguments passed as keyword have precedence
    merge_dicts(settings, {k: v for k, v in overrides.items()
                           if v is not None})

    return Bunch(_validate(settings))
