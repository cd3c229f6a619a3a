"""Kernel selection.

The compiled extension is used when it imports; otherwise the numpy fallback.
Set ``PRIMEZETA_KERNELS=python`` to force the fallback.
"""
import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["compiled"] = _ckernels


def _select():
    wanted = os.environ.get("PRIMEZETA_KERNELS", "").strip().lower()
    if wanted == "python" or _ckernels is None:
        return "python", _pykernels
    return "compiled", _ckernels


NAME, kernels = _select()


def get(name=None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return kernels
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None
