"""Kernel dispatch: the compiled extension when present, else pure Python.

``RRREG_PURE_PYTHON=1`` in the environment forces the fallback.
"""

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if not os.environ.get("RRREG_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

_impl = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

colon_witness = _impl.colon_witness
rank_mod_p = _impl.rank_mod_p

__all__ = ["BACKEND", "colon_witness", "rank_mod_p", "python_kernels", "compiled_kernels"]
