"""Backend selection for the product kernel.

The compiled extension is used when it imports; setting
``PERMFACT_PURE_PYTHON=1`` forces the pure-Python twin.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernel_py
from .core import Partition

try:
    from . import _kernel as _kernel_c
except ImportError:  # extension not built
    _kernel_c = None

BACKENDS = {"python": _kernel_py.pair_keys}
if _kernel_c is not None:
    BACKENDS["compiled"] = _kernel_c.pair_keys

if os.environ.get("PERMFACT_PURE_PYTHON") or _kernel_c is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"

MAX_KERNEL_N = 11
MAX_SEP = 6


def pair_keys(alphas: np.ndarray, betas: np.ndarray, m_sep: int = 0, backend: str | None = None) -> np.ndarray:
    fn = BACKENDS[backend or BACKEND]
    return fn(np.ascontiguousarray(alphas, dtype=np.int8), np.ascontiguousarray(betas, dtype=np.int8), m_sep)


def decode_key(key: int, n: int, m_sep: int = 0) -> tuple[Partition, int, tuple[int, ...]]:
    """Inverse of the key packing: ``(cycle type, common fixed points, rgs)``."""
    key = int(key)
    sep_base = m_sep ** m_sep
    rest, sep = divmod(key, sep_base)
    code, fixed = divmod(rest, n + 1)
    lengths = []
    while code:
        code, d = divmod(code, n + 1)
        lengths.append(d)
    rgs = []
    for _ in range(m_sep):
        sep, d = divmod(sep, m_sep)
        rgs.append(d)
    return Partition(lengths), fixed, tuple(rgs)
