"""Sparse linear algebra over the two-element field.

Chains are subsets of an indexed basis; matrices are lists of sparse rows.
Every chain carries its ambient dimension and every operation checks it:
several chain spaces of different dimensions coexist in this code base and
silently mixing them up is the likeliest bug class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class DimensionMismatch(ValueError):
    """Chains or matrices from different spaces were combined."""


@dataclass(frozen=True)
class BinaryChain:
    """A vector over GF(2), stored as the sorted support of an indexed basis.

    Addition is symmetric difference, so ``x + x = 0`` for every chain.
    """

    dimension: int
    support: tuple[int, ...] = ()

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")
        prev = -1
        for idx in self.support:
            if idx <= prev:
                raise ValueError("support must be strictly increasing")
            prev = idx
        if self.support and self.support[-1] >= self.dimension:
            raise ValueError(
                f"index {self.support[-1]} out of range for dimension {self.dimension}"
            )

    @classmethod
    def from_indices(cls, dimension: int, indices: Iterable[int]) -> "BinaryChain":
        """Build a chain from an unordered iterable; repeated indices cancel."""
        seen: set[int] = set()
        for idx in indices:
            seen.symmetric_difference_update((int(idx),))
        return cls(dimension, tuple(sorted(seen)))

    @classmethod
    def zero(cls, dimension: int) -> "BinaryChain":
        return cls(dimension, ())

    @property
    def weight(self) -> int:
        return len(self.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __contains__(self, index: int) -> bool:
        return index in set(self.support)

    def __add__(self, other: "BinaryChain") -> "BinaryChain":
        return add(self, other)

    __xor__ = __add__

    @cached_property
    def mask(self) -> int:
        """The chain as an integer bitmask (bit i = basis element i)."""
        out = 0
        for idx in self.support:
            out |= 1 << idx
        return out

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dimension, dtype=np.uint8)
        if self.support:
            out[list(self.support)] = 1
        return out


def add(a: BinaryChain, b: BinaryChain) -> BinaryChain:
    """Sum over GF(2): the symmetric difference of the supports."""
    if a.dimension != b.dimension:
        raise DimensionMismatch(
            f"chain dimensions differ: {a.dimension} != {b.dimension}"
        )
    return BinaryChain(a.dimension, tuple(sorted(set(a.support) ^ set(b.support))))


def chain_from_mask(dimension: int, mask: int) -> BinaryChain:
    support = []
    while mask:
        low = mask & -mask
        support.append(low.bit_length() - 1)
        mask ^= low
    return BinaryChain(dimension, tuple(support))


class BinaryMatrix:
    """A binary matrix as a tuple of sparse rows (sorted column indices).

    Immutable after construction.  The row echelon form is computed once on
    demand and cached, so repeated row-space membership queries cost
    O(cols x rank) bit operations instead of a fresh elimination.
    """

    __slots__ = ("rows", "cols", "row_supports", "_echelon", "__weakref__")

    def __init__(self, rows: int, cols: int,
                 row_supports: Sequence[Sequence[int]]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(row_supports) != rows:
            raise ValueError("row count does not match row_supports")
        canonical = []
        for support in row_supports:
            tup = tuple(int(i) for i in support)
            prev = -1
            for idx in tup:
                if idx <= prev:
                    raise ValueError("row support must be strictly increasing")
                prev = idx
            if tup and tup[-1] >= cols:
                raise ValueError(f"column index {tup[-1]} out of range")
            canonical.append(tup)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "row_supports", tuple(canonical))
        object.__setattr__(self, "_echelon", None)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatrix is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.row_supports == other.row_supports
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def row(self, i: int) -> BinaryChain:
        return BinaryChain(self.cols, self.row_supports[i])

    def apply_to(self, x: BinaryChain) -> BinaryChain:
        """XOR of the rows selected by x: the image of x viewed as a row
        combination.  Requires x.dimension == rows."""
        if x.dimension != self.rows:
            raise DimensionMismatch(
                f"chain of dimension {x.dimension} applied to {self.rows} rows"
            )
        acc = 0
        for i in x.support:
            acc ^= _row_mask(self.row_supports[i])
        return chain_from_mask(self.cols, acc)

    def transpose(self) -> "BinaryMatrix":
        cols_of: list[list[int]] = [[] for _ in range(self.cols)]
        for r, support in enumerate(self.row_supports):
            for c in support:
                cols_of[c].append(r)
        return BinaryMatrix(self.cols, self.rows, cols_of)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, support in enumerate(self.row_supports):
            if support:
                out[r, list(support)] = 1
        return out

    def echelon(self) -> "EchelonForm":
        ech = object.__getattribute__(self, "_echelon")
        if ech is None:
            ech = EchelonForm(self)
            object.__setattr__(self, "_echelon", ech)
        return ech


def _row_mask(support: Sequence[int]) -> int:
    out = 0
    for idx in support:
        out |= 1 << idx
    return out


class EchelonForm:
    """Reduced row echelon form of a BinaryMatrix, rows packed as integers.

    Alongside each echelon row we track which original rows were combined to
    produce it, so membership queries can also report an explicit row
    combination (`express`).
    """

    __slots__ = ("cols", "rank", "pivots", "pivot_rows", "combos")

    def __init__(self, matrix: BinaryMatrix):
        pivots: list[int] = []
        pivot_rows: list[int] = []
        combos: list[int] = []
        for r, support in enumerate(matrix.row_supports):
            row = _row_mask(support)
            combo = 1 << r
            row, combo = _reduce_tracking(row, combo, pivots, pivot_rows, combos)
            if row == 0:
                continue
            piv = (row & -row).bit_length() - 1
            # Back-substitute into existing rows to keep the form reduced.
            for k in range(len(pivot_rows)):
                if (pivot_rows[k] >> piv) & 1:
                    pivot_rows[k] ^= row
                    combos[k] ^= combo
            pivots.append(piv)
            pivot_rows.append(row)
            combos.append(combo)
        order = sorted(range(len(pivots)), key=lambda k: pivots[k])
        self.cols = matrix.cols
        self.rank = len(pivots)
        self.pivots = tuple(pivots[k] for k in order)
        self.pivot_rows = tuple(pivot_rows[k] for k in order)
        self.combos = tuple(combos[k] for k in order)

    def reduce_mask(self, mask: int) -> int:
        """Residual of a bitmask after elimination against the echelon rows."""
        for piv, row in zip(self.pivots, self.pivot_rows):
            if (mask >> piv) & 1:
                mask ^= row
        return mask

    def contains_mask(self, mask: int) -> bool:
        return self.reduce_mask(mask) == 0

    def in_row_space(self, v: BinaryChain) -> bool:
        if v.dimension != self.cols:
            raise DimensionMismatch(
                f"chain dimension {v.dimension} does not match {self.cols} columns"
            )
        return self.contains_mask(v.mask)

    def express(self, v: BinaryChain) -> tuple[int, ...] | None:
        """Indices of original rows summing to v, or None if v is outside
        the row space."""
        if v.dimension != self.cols:
            raise DimensionMismatch(
                f"chain dimension {v.dimension} does not match {self.cols} columns"
            )
        mask = v.mask
        combo = 0
        for piv, row, cmb in zip(self.pivots, self.pivot_rows, self.combos):
            if (mask >> piv) & 1:
                mask ^= row
                combo ^= cmb
        if mask != 0:
            return None
        return tuple(chain_from_mask(1 + combo.bit_length(), combo).support)

    def packed(self) -> tuple[np.ndarray, np.ndarray]:
        """Pivot columns and echelon rows packed into uint64 words, for
        jitted reduction loops."""
        words = (self.cols + 63) // 64 or 1
        rows = np.zeros((self.rank, words), dtype=np.uint64)
        for k, row in enumerate(self.pivot_rows):
            for w in range(words):
                rows[k, w] = (row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
        return np.asarray(self.pivots, dtype=np.int64), rows


def _reduce_tracking(row: int, combo: int, pivots, pivot_rows, combos):
    for k in range(len(pivots)):
        if (row >> pivots[k]) & 1:
            row ^= pivot_rows[k]
            combo ^= combos[k]
    return row, combo


def rank(matrix: BinaryMatrix) -> int:
    """GF(2) row rank via the cached echelon form."""
    return matrix.echelon().rank


def in_row_space(matrix: BinaryMatrix, v: BinaryChain) -> bool:
    """True iff v is a GF(2) combination of the rows of the matrix."""
    if v.dimension != matrix.cols:
        raise DimensionMismatch(
            f"chain dimension {v.dimension} does not match {matrix.cols} columns"
        )
    return matrix.echelon().in_row_space(v)


def matrix_from_dense(dense: np.ndarray) -> BinaryMatrix:
    dense = np.asarray(dense, dtype=np.uint8) & 1
    rows = [tuple(np.nonzero(r)[0].tolist()) for r in dense]
    return BinaryMatrix(dense.shape[0], dense.shape[1], rows)
