"""Select the diagram kernel at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise, or
when the environment variable ``TLBD_PURE_PYTHON`` is set to a non-empty
value, the pure-Python implementation is used.  ``BACKEND`` records which one
is active.
"""

from __future__ import annotations

import os

from . import _kernel_py

VALID = _kernel_py.VALID
NOT_INVOLUTION = _kernel_py.NOT_INVOLUTION
NOT_PLANAR = _kernel_py.NOT_PLANAR
DOT_HIDDEN = _kernel_py.DOT_HIDDEN

if os.environ.get("TLBD_PURE_PYTHON"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

compose = _impl.compose
validate = _impl.validate
