"""Kernel backend selection.

The hot loops (orbit confirmation sweeps, tiling enumeration) have two
implementations: a compiled Cython extension and a pure-Python fallback.
The compiled one is picked at import time when available.  Set

    IMOCHECK_BACKEND=pure      force the pure-Python kernels
    IMOCHECK_BACKEND=cython    require the compiled kernels (ImportError if absent)

``benchmarks/bench_backends.py`` compares the two.
"""

from __future__ import annotations

import os

from . import _kernel_py

_choice = os.environ.get("IMOCHECK_BACKEND", "auto").lower()

if _choice == "pure":
    kernel = _kernel_py
elif _choice == "cython":
    from . import _kernel_cy as kernel  # type: ignore[no-redef]
elif _choice == "auto":
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _kernel_py
else:
    raise ValueError(f"IMOCHECK_BACKEND must be auto, cython or pure, not {_choice!r}")

BACKEND_NAME: str = kernel.BACKEND_NAME
ORBIT_CEILING: int = kernel.ORBIT_CEILING

isqrt = kernel.isqrt
orbit_fill = kernel.orbit_fill
confirm_plus3_run = kernel.confirm_plus3_run
enum_tilings = kernel.enum_tilings
