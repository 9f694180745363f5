"""Kernel selection.

The compiled extension is picked up when present; HALLMARK_PURE=1 forces
the pure-Python fallback (useful for benchmarking and debugging).  Both
backends expose the same functions and produce identical results.
"""

from __future__ import annotations

import os

if os.environ.get("HALLMARK_PURE"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel  # type: ignore[no-redef]

BACKEND: str = kernel.BACKEND
