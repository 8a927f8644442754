"""Backend selection for the residue-list hot loops.

The Cython extension ``_ckernels`` is used when it imports and the modulus is
below 2**31; otherwise calls go to the pure-Python ``_kernels_py``. Setting
``FFTPOLY_PURE_PYTHON=1`` before import forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if os.environ.get("FFTPOLY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
COMPILED_MAX_MODULUS = 1 << 31


def _impl(p: int):
    if _compiled is not None and p < COMPILED_MAX_MODULUS:
        return _compiled
    return _kernels_py


def backend_for(p: int) -> str:
    return "compiled" if _impl(p) is _compiled else "python"


def convolve(a: list[int], b: list[int], p: int) -> list[int]:
    return _impl(p).convolve(a, b, p)


def ntt(a: list[int], n: int, w: int, p: int) -> list[int]:
    return _impl(p).ntt(a, n, w, p)


def pointwise(a: list[int], b: list[int], p: int) -> list[int]:
    return _impl(p).pointwise(a, b, p)


def scale(a: list[int], c: int, p: int) -> list[int]:
    return _impl(p).scale(a, c, p)
