"""Kernel selection.

The compiled ``_core`` module is used when it was built; otherwise the numpy
fallback.  Set ``ZCCS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _fallback

fallback = _fallback

try:
    from . import _core as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("ZCCS_PURE_PYTHON"):
    impl = compiled
else:
    impl = _fallback

NAME = impl.NAME


def available():
    """Names of the kernel implementations importable in this process."""
    names = [_fallback.NAME]
    if compiled is not None:
        names.append(compiled.NAME)
    return names


def get(name):
    if name == _fallback.NAME:
        return _fallback
    if compiled is not None and name == compiled.NAME:
        return compiled
    raise KeyError(f"kernel backend {name!r} not available")
