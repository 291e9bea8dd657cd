"""Rank-kernel selection: compiled extension when available, pure otherwise.

Set LEFPROP_PURE=1 in the environment to force the pure-Python kernels even
when the extension was built (used by the benchmark and the test matrix).
"""

from __future__ import annotations

import os

from . import _ranks_py

try:
    from . import _core as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

_FORCE_PURE = bool(os.environ.get("LEFPROP_PURE"))
_impl = _ranks_py if (_FORCE_PURE or _compiled is None) else _compiled

BACKEND: str = "pure" if _impl is _ranks_py else "compiled"
COMPILED_AVAILABLE: bool = _compiled is not None

# Largest prime below 2^31; products of residues fit in 64 bits.
WORD_PRIME: int = 2147483647


def rank_int_rows(rows, ncols: int) -> int:
    """Exact rank of integer rows; transparently retries the big-int path."""
    r = _impl.rank_i64(rows, ncols)
    if r < 0:
        r = _ranks_py.rank_i64(rows, ncols)
    return r


def rank_mod_rows(rows, ncols: int, p: int = WORD_PRIME) -> int:
    """Rank modulo p; always a lower bound for the exact rank."""
    if _impl is not _ranks_py and p < 2**31:
        return _impl.rank_mod(rows, ncols, p)
    return _ranks_py.rank_mod(rows, ncols, p)
