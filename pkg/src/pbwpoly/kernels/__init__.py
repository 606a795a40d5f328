"""Kernel backends for the hot enumeration loops.

Two implementations with identical semantics and output order:

* ``numba`` -- @njit depth-first backtracking (default when importable)
* ``numpy`` -- layered frontier expansion in pure NumPy

Select with the environment variable ``PBWPOLY_BACKEND=numba|numpy``.
"""
from __future__ import annotations

import os

from . import backend_numpy

try:
    from . import backend_numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    backend_numba = None
    HAVE_NUMBA = False

ENV_VAR = "PBWPOLY_BACKEND"

_BACKENDS = {"numpy": backend_numpy}
if HAVE_NUMBA:
    _BACKENDS["numba"] = backend_numba


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name: str | None = None):
    """Resolve a backend module by name, or from the environment/default."""
    if name is None:
        name = os.environ.get(ENV_VAR, "").strip().lower() or None
    if name is None:
        name = "numba" if HAVE_NUMBA else "numpy"
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None


def active_backend_name() -> str:
    mod = get_backend()
    return "numba" if mod is backend_numba else "numpy"
