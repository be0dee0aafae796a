"""Selects the product kernels at import time.

The compiled extension is used when it was built; otherwise, or when
``HORNLAB_PURE=1`` is set, the pure-Python implementation is used.  Both
produce identical dictionaries.
"""

import os

from . import _lr_py

try:
    if os.environ.get("HORNLAB_PURE"):
        raise ImportError("pure kernel requested")
    from . import _lr_ext
except ImportError:
    _lr_ext = None

BACKEND = "compiled" if _lr_ext is not None else "python"
_impl = _lr_ext if _lr_ext is not None else _lr_py

lr_product = _impl.lr_product
quantum_expand = _impl.quantum_expand
rim_hook_reduce = _lr_py.rim_hook_reduce


def backends():
    """Available implementations as ``{name: module}``."""
    out = {"python": _lr_py}
    if _lr_ext is not None:
        out["compiled"] = _lr_ext
    return out
