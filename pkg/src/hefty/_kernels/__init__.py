"""Hot integer kernels with a compiled backend and a pure-Python fallback.

The compiled extension is used when it imports and ``HEFTY_PURE_PYTHON`` is not
set.  Calls that would overflow 128-bit arithmetic, or exceed 64 points for the
bitmask table, are transparently redone by the Python backend.
"""

import logging
import os

from hefty._kernels import _pykernels
from hefty._kernels._common import DegenerateInput, KernelOverflow

log = logging.getLogger(__name__)

_compiled = None
if not os.environ.get("HEFTY_PURE_PYTHON"):
    try:
        from hefty._kernels import _ckernels as _compiled
    except ImportError:  # pragma: no cover - depends on the build
        log.debug("compiled kernels unavailable; using pure Python")

BACKEND = _compiled.NAME if _compiled is not None else _pykernels.NAME

__all__ = [
    "BACKEND", "DegenerateInput", "KernelOverflow", "backends",
    "heft_table", "depths", "locate",
]


def backends():
    """Available backend modules keyed by name (the compiled one may be missing)."""
    out = {_pykernels.NAME: _pykernels}
    if _compiled is not None:
        out[_compiled.NAME] = _compiled
    return out


def _dispatch(name, *args, **kwargs):
    if _compiled is not None:
        try:
            return getattr(_compiled, name)(*args, **kwargs)
        except (KernelOverflow, OverflowError):
            log.debug("%s: falling back to Python big ints", name)
    return getattr(_pykernels, name)(*args, **kwargs)


def heft_table(coords, weights=None, first_lo=0, first_hi=None):
    """Hefts and enclosed bitmasks of all (d+1)-subsets of integer points.

    ``weights`` (integers, same scale as squared coordinates) switch the
    in-sphere test to the orthosphere test.  Subsets are produced in
    lexicographic order, restricted to first index in ``[first_lo, first_hi)``.
    """
    return _dispatch("heft_table", coords, weights, first_lo, first_hi)


def depths(coords, queries):
    """Halfspace depth of each integer query point."""
    return _dispatch("depths", coords, queries)


def locate(coords, simplices, query):
    """Classify ``query`` against each simplex: 1 interior, 0 boundary, -1 outside."""
    return _dispatch("locate", coords, simplices, query)
