"""Kernel selection.

The compiled kernel is used when it imported cleanly and the ideal fits its
packed representation; otherwise the pure-Python kernel runs. Setting
``EDGEDEPTH_PURE_PYTHON=1`` forces the pure path.
"""

from __future__ import annotations

import os

from . import _pykernel

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

FORCE_PURE = os.environ.get("EDGEDEPTH_PURE_PYTHON", "").strip() not in ("", "0")

BACKENDS = ("compiled", "python")


def compiled_available() -> bool:
    return _compiled is not None


def default_backend() -> str:
    return "python" if FORCE_PURE or _compiled is None else "compiled"


def fits_compiled(n_vars: int, max_exp: int) -> bool:
    return 1 <= n_vars <= 12 and max_exp <= 15


def resolve(backend: str | None, n_vars: int, max_exp: int) -> str:
    """Concrete backend for one call; ``None`` or ``"auto"`` picks the
    default and falls back to Python when the ideal does not fit."""
    if backend in (None, "auto"):
        backend = default_backend()
        if backend == "compiled" and not fits_compiled(n_vars, max_exp):
            backend = "python"
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernel is not available")
    return backend


def koszul_cores(gens, n_vars: int, max_elements: int, backend: str | None = None):
    max_exp = max((max(g) for g in gens), default=0)
    chosen = resolve(backend, n_vars, max_exp)
    mod = _compiled if chosen == "compiled" else _pykernel
    return mod.koszul_cores(gens, n_vars, max_elements)
