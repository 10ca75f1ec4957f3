"""Selects the reduction kernel at import time.

The compiled store (``_ckernel``, Cython) handles prime fields whenever the
term keys of a computation fit in 64 bits; everything else, including all
computations over QQ, runs on the pure-Python store.  Set the environment
variable ``OIDEAL_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from ._pykernel import PyStore

try:
    if os.environ.get("OIDEAL_PURE_PYTHON"):
        raise ImportError("pure Python kernel requested")
    from ._ckernel import CStore
except ImportError:  # pragma: no cover - depends on the build
    CStore = None

HAVE_COMPILED = CStore is not None
_force_python = False


def use_compiled(flag: bool) -> None:
    """Enable or disable the compiled kernel at runtime (benchmarks, tests)."""
    global _force_python
    _force_python = not flag


def compiled_active() -> bool:
    return HAVE_COMPILED and not _force_python


def make_store(order, p: int):
    if p and compiled_active() and order.fits_int64():
        return CStore(order, p)
    return PyStore(order, p)
