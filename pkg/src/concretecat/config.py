"""Global enumeration cap shared by all brute-force searches."""
from contextlib import contextmanager

from .errors import EnumerationOverflow

DEFAULT_CAP = 10**6

_cap = DEFAULT_CAP


def get_cap():
    return _cap


def set_cap(value):
    global _cap
    if value < 1:
        raise ValueError("cap must be positive")
    _cap = int(value)


@contextmanager
def cap(value):
    """Temporarily change the cap: ``with cap(100): ...``."""
    old = get_cap()
    set_cap(value)
    try:
        yield
    finally:
        set_cap(old)


def check_cap(what, size):
    if size > _cap:
        raise EnumerationOverflow(what, size, _cap)
