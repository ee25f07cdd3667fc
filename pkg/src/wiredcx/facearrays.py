"""Vectorised helpers over faces stored as ``(F, 6)`` integer arrays.

Row layout is ``a1 b1 a2 b2 a3 b3``. The six column permutations below
are the dihedral readings of a triangle (rotations, then rotations of the
reflection), in the same order as :func:`wiredcx.wired.face_variants`.
"""

from __future__ import annotations

import numpy as np

VARIANT_COLUMNS = np.array(
    [
        [0, 1, 2, 3, 4, 5],
        [2, 3, 4, 5, 0, 1],
        [4, 5, 0, 1, 2, 3],
        [5, 4, 3, 2, 1, 0],
        [3, 2, 1, 0, 5, 4],
        [1, 0, 5, 4, 3, 2],
    ]
)


def encode(rows: np.ndarray, base: int) -> np.ndarray:
    """Order-preserving integer code of each row (last axis, mixed radix ``base``)."""
    width = rows.shape[-1]
    if base ** width < 2**62:
        codes = np.zeros(rows.shape[:-1], dtype=np.int64)
        for k in range(width):
            codes = codes * base + rows[..., k].astype(np.int64)
        return codes
    codes = np.zeros(rows.shape[:-1], dtype=object)
    for k in range(width):
        codes = codes * base + rows[..., k].astype(object)
    return codes


def normalize_rows(rows: np.ndarray, base: int) -> np.ndarray:
    """Lexicographically least dihedral reading of every face row."""
    variants = rows[..., VARIANT_COLUMNS]  # (..., 6, 6)
    codes = encode(variants, base)
    best = np.argmin(codes, axis=-1)
    return np.take_along_axis(variants, best[..., None, None], axis=-2)[..., 0, :]


def is_canonical(rows: np.ndarray, base: int) -> np.ndarray:
    variants = rows[..., VARIANT_COLUMNS]
    codes = encode(variants, base)
    return codes[..., 0] == codes.min(axis=-1)


def lex_sort_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def wires_compatible_rows(a1, b1, a2, b2) -> np.ndarray:
    """Elementwise wire compatibility: equal, inverse or disjoint."""
    same = (a1 == a2) & (b1 == b2)
    inverse = (a1 == b2) & (b1 == a2)
    disjoint = (a1 != a2) & (a1 != b2) & (b1 != a2) & (b1 != b2)
    return same | inverse | disjoint
