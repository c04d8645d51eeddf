"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it imports; otherwise the
pure-Python ``_pykernels`` twin. Set ``TREEDECK_PURE_PYTHON=1`` to force the
fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TREEDECK_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

code_key = _pykernels.code_key
rooted_code = _impl.rooted_code
component_free_codes = _impl.component_free_codes
card_codes = _impl.card_codes
vertex_codes = _impl.vertex_codes
prufer_decode = _impl.prufer_decode
prufer_class_codes = _impl.prufer_class_codes
