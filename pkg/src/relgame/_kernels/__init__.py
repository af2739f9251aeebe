"""Kernel backends for the exhaustive axiom scan.

The compiled extension is preferred when it imported cleanly; the
vectorized numpy backend is the fallback.  ``RELGAME_KERNEL=python`` or
``RELGAME_KERNEL=c`` forces a choice (the benchmark uses this too).
"""

from __future__ import annotations

import os

from . import purepy
from .tables import KernelTables, build_tables

try:
    from . import _speedups
except ImportError:  # pragma: no cover - depends on how the package was built
    _speedups = None

_BACKENDS = {"python": purepy}
if _speedups is not None:
    _BACKENDS["c"] = _speedups

__all__ = ["KernelTables", "build_tables", "get_backend", "available_backends"]


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name: str | None = None):
    """Resolve a scanner backend module (``scan`` + ``name``)."""
    if name is None:
        name = os.environ.get("RELGAME_KERNEL")
    if name is None:
        name = "c" if "c" in _BACKENDS else "python"
    if name not in _BACKENDS:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        )
    return _BACKENDS[name]
