"""Brute-force reference answers, used to check every engine.

The pairwise scan lives in a compiled extension when one was built; the
pure-Python module with the same functions is used otherwise, or when the
``APSP_PURE_PYTHON`` environment variable is set.
"""

from __future__ import annotations

import os
from typing import Mapping

from . import _kernels_py
from .model import OverlapRecord

if os.environ.get("APSP_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"


def lspo_naive(x: str, y: str) -> int:
    """Length of the longest suffix of ``x`` that is also a prefix of ``y``."""
    return _impl.lspo(x, y)


class NaiveSet:
    """Alive strings keyed by id, mirroring an engine's alive set."""

    def __init__(self, strings: Mapping[int, str] | None = None):
        self.strings: dict[int, str] = dict(strings or {})

    def add(self, sid: int, content: str) -> None:
        self.strings[sid] = content

    def remove(self, sid: int) -> None:
        del self.strings[sid]

    def forward(self, i: int, ell: int = 0) -> set[OverlapRecord]:
        ids = list(self.strings)
        row = _impl.overlap_row(self.strings[i], [self.strings[j] for j in ids])
        return {OverlapRecord(i, j, n) for j, n in zip(ids, row) if n >= ell}

    def backward(self, i: int, ell: int = 0) -> set[OverlapRecord]:
        ids = list(self.strings)
        col = _impl.overlap_column([self.strings[j] for j in ids], self.strings[i])
        return {OverlapRecord(j, i, n) for j, n in zip(ids, col) if n >= ell}


def apsp_pairs(strings: NaiveSet | Mapping[int, str], ell: int = 0) -> dict[tuple[int, int], int]:
    """``(i, j) -> |lspo(i, j)|`` for all ordered pairs with length at least ``ell``."""
    if isinstance(strings, NaiveSet):
        strings = strings.strings
    ids = list(strings)
    matrix = _impl.overlap_matrix([strings[i] for i in ids])
    return {
        (i, j): n
        for i, row in zip(ids, matrix)
        for j, n in zip(ids, row)
        if n >= ell
    }


def apsp_naive(strings: NaiveSet | Mapping[int, str], ell: int = 0) -> set[OverlapRecord]:
    return {OverlapRecord(i, j, n) for (i, j), n in apsp_pairs(strings, ell).items()}
