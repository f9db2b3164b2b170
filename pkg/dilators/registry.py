"""Dilators by name, as used on the command line."""
import re

from .base import PraeDilator
from .composition import Composite
from .exceptions import DilatorError
from .exponential import E
from .normal_f import F
from .zoo import HollowDilator, zoo

NAMED = {'F': F, 'E': E}

_COMPOSITION = re.compile(r'\s*[.∘]\s*')


def get_dilator(name: str) -> PraeDilator:
    """
    ``F``, ``E``, a zoo name (``identity``, ``successor``, ``successor_top_mu``,
    ``lift``, ``constant_<c>``), ``hollow_<name>`` or a composition such as
    ``F.E`` (also written ``F∘E``).
    """
    name = name.strip()
    parts = _COMPOSITION.split(name)
    if len(parts) > 1:
        if not all(parts):
            raise DilatorError(f'malformed composition {name!r}')
        dilator = get_dilator(parts[-1])
        for outer in reversed(parts[:-1]):
            dilator = Composite(get_dilator(outer), dilator)
        return dilator
    if name in NAMED:
        return NAMED[name]
    if name.startswith('hollow_'):
        return HollowDilator(get_dilator(name[len('hollow_'):]))
    return zoo(name)
