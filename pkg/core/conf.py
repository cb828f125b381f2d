from types import MappingProxyType

from django.conf import settings

_DEFAULTS = {
    'MAX_GROUP_ORDER': 2 ** 63,
    'ORACLE_MAX_ORDER': 256,
    'ISO_SEARCH_CAP': 2 ** 20,
    'BRICK_SEARCH_CAP': 2 ** 24,
    'DEFAULT_FIELD_Q': 4,
}


def toolkit_settings():
    """
    Resolved toolkit limits, read from the TAUTILT_* settings.
    """
    return MappingProxyType({
        key: getattr(settings, f'TAUTILT_{key}', default)
        for key, default in _DEFAULTS.items()
    })


def toolkit_setting(key):
    return toolkit_settings()[key]
