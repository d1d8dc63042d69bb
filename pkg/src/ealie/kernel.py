"""Kernel selector: compiled extension when available, pure Python otherwise.

Set ``EALIE_PURE_PYTHON=1`` to force the pure backend (useful for benchmarking
and for debugging the compiled twin against it).
"""

import os

if os.environ.get("EALIE_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND: str = _impl.BACKEND

kappa = _impl.kappa
g_cocycle = _impl.g_cocycle
structure_constant = _impl.structure_constant
int_echelon = _impl.int_echelon
int_rank = _impl.int_rank
