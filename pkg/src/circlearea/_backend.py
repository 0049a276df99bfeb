"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise the
pure-Python ``_pykernels`` twin. Set ``CIRCLEAREA_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from circlearea import _pykernels

kernels = _pykernels
BACKEND = "python"

if os.environ.get("CIRCLEAREA_PURE_PYTHON") != "1":
    try:
        from circlearea import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"
