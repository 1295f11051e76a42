import numpy as np
import pytest
from hypothesis import given, strategies as st

from tricolor import gf2
from tricolor.gf2 import BinaryChain, BinaryMatrix, DimensionMismatch

from oracles import dense_rank_gf2, dense_in_rowspace_gf2


def chain(dim, *idx):
    return BinaryChain(dim, tuple(sorted(idx)))


def random_matrix(rng, rows, cols):
    dense = rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
    return gf2.matrix_from_dense(dense), dense


class TestBinaryChain:
    def test_add_symmetric_difference(self):
        assert gf2.add(chain(4, 1, 2), chain(4, 2, 3)) == chain(4, 1, 3)

    def test_add_self_is_zero(self):
        x = chain(6, 0, 3, 5)
        assert gf2.add(x, x) == BinaryChain.zero(6)

    def test_add_identity(self):
        assert gf2.add(chain(3, 0), BinaryChain.zero(3)) == chain(3, 0)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(DimensionMismatch):
            gf2.add(chain(3, 0), chain(4, 0))

    def test_unsorted_support_rejected(self):
        with pytest.raises(ValueError):
            BinaryChain(5, (3, 1))
        with pytest.raises(ValueError):
            BinaryChain(5, (1, 1))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            BinaryChain(3, (3,))

    def test_from_indices_cancels_duplicates(self):
        assert BinaryChain.from_indices(5, [2, 4, 2]) == chain(5, 4)

    def test_mask_round_trip(self):
        x = chain(10, 0, 7, 9)
        assert gf2.chain_from_mask(10, x.mask) == x

    @given(st.integers(1, 30).flatmap(
        lambda d: st.tuples(
            st.just(d),
            st.sets(st.integers(0, d - 1)),
            st.sets(st.integers(0, d - 1)),
        )
    ))
    def test_add_matches_set_symmetric_difference(self, data):
        d, sa, sb = data
        a = BinaryChain(d, tuple(sorted(sa)))
        b = BinaryChain(d, tuple(sorted(sb)))
        assert set(gf2.add(a, b).support) == (sa ^ sb)
        assert gf2.add(a, b) == gf2.add(b, a)


class TestRank:
    def test_identity(self):
        m = gf2.matrix_from_dense(np.eye(3, dtype=np.uint8))
        assert gf2.rank(m) == 3

    def test_zero(self):
        m = BinaryMatrix(4, 6, [()] * 4)
        assert gf2.rank(m) == 0

    def test_rank_at_most_min_dim(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            rows = int(rng.integers(0, 9))
            cols = int(rng.integers(1, 9))
            m, _ = random_matrix(rng, rows, cols)
            assert gf2.rank(m) <= min(rows, cols)

    def test_against_dense_oracle(self):
        rng = np.random.default_rng(17)
        for _ in range(60):
            rows = int(rng.integers(1, 12))
            cols = int(rng.integers(1, 12))
            m, dense = random_matrix(rng, rows, cols)
            assert gf2.rank(m) == dense_rank_gf2(dense)


class TestRowSpace:
    def test_zero_chain_always_member(self):
        m = BinaryMatrix(2, 5, [(0, 1), (2, 4)])
        assert gf2.in_row_space(m, BinaryChain.zero(5))

    def test_identity_membership(self):
        m = gf2.matrix_from_dense(np.eye(3, dtype=np.uint8))
        assert gf2.in_row_space(m, chain(3, 0, 2))

    def test_every_row_is_member(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            m, _ = random_matrix(rng, int(rng.integers(1, 8)), int(rng.integers(1, 10)))
            for i in range(m.rows):
                assert gf2.in_row_space(m, m.row(i))

    def test_dimension_check(self):
        m = BinaryMatrix(1, 4, [(0,)])
        with pytest.raises(DimensionMismatch):
            gf2.in_row_space(m, chain(5, 0))

    def test_exhaustive_small_against_oracle(self):
        # All vectors of F_2^6 against a handful of random matrices.
        rng = np.random.default_rng(3)
        for _ in range(8):
            m, dense = random_matrix(rng, int(rng.integers(1, 7)), 6)
            for bits in range(64):
                v = np.array([(bits >> k) & 1 for k in range(6)], dtype=np.uint8)
                got = gf2.in_row_space(m, gf2.chain_from_mask(6, bits))
                assert got == dense_in_rowspace_gf2(dense, v)

    def test_random_combination_and_flip(self):
        rng = np.random.default_rng(41)
        for _ in range(40):
            rows, cols = 6, 12
            m, dense = random_matrix(rng, rows, cols)
            coeff = rng.integers(0, 2, size=rows, dtype=np.uint8)
            v = (coeff @ dense) % 2
            vc = gf2.matrix_from_dense(v.reshape(1, -1)).row(0)
            assert gf2.in_row_space(m, vc)
            flip = int(rng.integers(0, cols))
            w = v.copy()
            w[flip] ^= 1
            wc = gf2.matrix_from_dense(w.reshape(1, -1)).row(0)
            assert gf2.in_row_space(m, wc) == dense_in_rowspace_gf2(dense, w)


class TestEchelonForm:
    def test_reuse_across_queries(self):
        m = BinaryMatrix(3, 6, [(0, 1), (1, 2), (4, 5)])
        ech = m.echelon()
        assert m.echelon() is ech
        assert ech.rank == 3

    def test_express_recovers_combination(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            m, dense = random_matrix(rng, 5, 9)
            coeff = rng.integers(0, 2, size=5, dtype=np.uint8)
            v = (coeff @ dense) % 2
            vc = gf2.matrix_from_dense(v.reshape(1, -1)).row(0)
            combo = m.echelon().express(vc)
            assert combo is not None
            recon = np.zeros(9, dtype=np.uint8)
            for i in combo:
                recon ^= dense[i]
            assert np.array_equal(recon, v)

    def test_express_none_outside(self):
        m = BinaryMatrix(1, 3, [(0, 1)])
        assert m.echelon().express(chain(3, 0)) is None

    def test_packed_matches_reduce(self):
        rng = np.random.default_rng(11)
        m, _ = random_matrix(rng, 8, 70)
        ech = m.echelon()
        pivots, words = ech.packed()
        assert words.shape == (ech.rank, 2)
        for bits in rng.integers(0, 2 ** 63, size=10, dtype=np.int64):
            mask = int(bits)
            resid = ech.reduce_mask(mask)
            acc = mask
            for k in range(ech.rank):
                if (acc >> int(pivots[k])) & 1:
                    acc ^= int(words[k, 0]) | (int(words[k, 1]) << 64)
            assert acc == resid


class TestMatrix:
    def test_apply_to_xors_rows(self):
        m = BinaryMatrix(3, 4, [(0, 1), (1, 2), (3,)])
        assert m.apply_to(chain(3, 0, 1)) == chain(4, 0, 2)

    def test_apply_dimension_check(self):
        m = BinaryMatrix(2, 4, [(0,), (1,)])
        with pytest.raises(DimensionMismatch):
            m.apply_to(chain(3, 0))

    def test_transpose_involution(self):
        rng = np.random.default_rng(123)
        m, dense = random_matrix(rng, 5, 7)
        assert m.transpose().transpose() == m
        assert np.array_equal(m.transpose().to_dense(), dense.T)

    def test_immutable(self):
        m = BinaryMatrix(1, 1, [(0,)])
        with pytest.raises(AttributeError):
            m.rows = 5
