"""Bit-packed GF(2) vectors for the per-trial stabilizer membership test.

An echelon form is frozen into word-packed rows once per code; reducing a
residual vector against it is then a few thousand word XORs per trial.
"""

from __future__ import annotations

import numpy as np

from tricolor._blossom import njit
from tricolor.gf2 import EchelonForm


def pack_index_set(indices: np.ndarray, dimension: int) -> np.ndarray:
    words = (dimension + 63) // 64 or 1
    out = np.zeros(words, dtype=np.uint64)
    if len(indices):
        idx = np.asarray(indices, dtype=np.int64)
        np.bitwise_xor.at(out, idx >> 6,
                          np.uint64(1) << (idx & 63).astype(np.uint64))
    return out


class PackedEchelon:
    """Word-packed reduced echelon form with precomputed pivot masks."""

    def __init__(self, ech: EchelonForm):
        pivots, rows = ech.packed()
        self.cols = ech.cols
        self.words = rows.shape[1] if rows.size else (ech.cols + 63) // 64 or 1
        self.rows = np.ascontiguousarray(rows)
        self.piv_word = (pivots >> 6).astype(np.int64)
        self.piv_mask = (np.uint64(1) << (pivots & 63).astype(np.uint64))

    def contains(self, vec_words: np.ndarray) -> bool:
        """Destructive membership test: reduces vec_words in place."""
        return bool(_reduce_contains(self.piv_word, self.piv_mask,
                                     self.rows, vec_words))


@njit(cache=True)
def _reduce_contains(piv_word, piv_mask, rows, vec):
    nr = piv_word.shape[0]
    nw = vec.shape[0]
    for k in range(nr):
        if vec[piv_word[k]] & piv_mask[k]:
            for w in range(nw):
                vec[w] ^= rows[k, w]
    for w in range(nw):
        if vec[w]:
            return False
    return True
