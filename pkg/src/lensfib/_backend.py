"""Select the braid-word kernel implementation at import time.

The compiled extension is used when it was built; set ``LENSFIB_PURE=1`` to
force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LENSFIB_PURE", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

free_reduce = kernels.free_reduce
permutation = kernels.permutation
crossing_tally = kernels.crossing_tally

__all__ = ["BACKEND", "free_reduce", "permutation", "crossing_tally"]
