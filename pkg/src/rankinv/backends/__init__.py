"""Backend selection for the hot kernels.

RANKINV_BACKEND chooses the implementation: "numba" (default when numba
imports), "numpy" (pure-numpy fallback), or "auto".  Both expose the same
functions and produce identical results; see benchmarks/bench_backends.py
for a speed comparison.
"""

from __future__ import annotations

import os

from ..errors import PreconditionError

BACKEND_ENV = "RANKINV_BACKEND"

_active = None


def _load(name: str):
    if name == "numpy":
        from . import numpy_impl
        return numpy_impl
    if name == "numba":
        from . import numba_impl
        return numba_impl
    raise PreconditionError(f"unknown backend {name!r}")


def set_backend(name: str):
    """Select 'numba', 'numpy', or 'auto'; returns the active module."""
    global _active
    if name == "auto":
        try:
            _active = _load("numba")
        except ImportError:
            _active = _load("numpy")
    else:
        _active = _load(name)
    return _active


def active():
    """The currently selected backend module."""
    if _active is None:
        set_backend(os.environ.get(BACKEND_ENV, "auto").strip() or "auto")
    return _active
