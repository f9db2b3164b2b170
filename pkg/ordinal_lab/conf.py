"""
Access to the desk-scale bounds configured in ``settings.ORDLAB``.

Library code takes its bounds as keyword arguments and only falls back to
these values when a caller leaves them out.
"""
from django.conf import settings

DEFAULTS = {
    'SIZE_BOUND': 6,
    'ELEMENT_BOUND': 50,
    'SUPREMUM_SEARCH_BOUND': 50,
    'CHAIN_WINDOW': 20,
    'CHAIN_COMPARISON_FACTOR': 50,
    'DEFAULT_SEED': 0,
    'MAX_LITERAL': 2 ** 32,
}


def bound(name: str) -> int:
    """Return the configured value for ``name``, or its built-in default."""
    configured = getattr(settings, 'ORDLAB', {}) if settings.configured else {}
    if name in configured:
        return configured[name]
    return DEFAULTS[name]
