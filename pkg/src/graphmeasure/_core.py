"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
kernels are used.  Set ``GRAPHMEASURE_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("GRAPHMEASURE_PURE"):
    from graphmeasure import _kernels_py as kernels
    BACKEND = "python"
else:
    try:
        from graphmeasure import _kernels as kernels
        BACKEND = "cython"
    except ImportError:
        from graphmeasure import _kernels_py as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
