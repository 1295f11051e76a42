import numpy as np
import pytest

from tricolor.colorcode import build_color_code, color_syndrome
from tricolor.decode import (
    DecodeStatus,
    InvalidSyndrome,
    decode_color,
    judge,
    matching_surface_decoder,
)
from tricolor.gf2 import BinaryChain, DimensionMismatch
from tricolor.projection import project_error
from tricolor.tiling import COLORS, homology_complex


@pytest.fixture(scope="module")
def code2():
    return build_color_code(2)


def chain(n, *idx):
    return BinaryChain(n, tuple(sorted(idx)))


def sample_error(code, p, rng):
    idx = np.nonzero(rng.random(code.n) < p)[0]
    return BinaryChain(code.n, tuple(int(i) for i in idx))


class TestDecodeColor:
    def test_zero_syndrome(self, code2):
        out = decode_color(code2, BinaryChain.zero(code2.hypergraph.num_vertices))
        assert out.status is DecodeStatus.CORRECTED
        assert out.estimate is not None and not out.estimate
        assert out.per_color_weights == (0, 0, 0)
        assert out.combined_boundary_weight == 0

    def test_every_single_hyperedge_recovered_exactly(self, code2):
        for e in range(code2.n):
            x = chain(code2.n, e)
            out = decode_color(code2, color_syndrome(code2, x))
            assert out.status is DecodeStatus.CORRECTED
            assert out.estimate == x

    def test_frozen_example_estimate_differs_by_two_hyperfaces(self, code2):
        # one concrete weight-3 error whose estimate is off by the boundary
        # of exactly two hyperfaces, and therefore still judged a success
        x = chain(code2.n, 11, 23, 30)
        out = decode_color(code2, color_syndrome(code2, x))
        assert out.status is DecodeStatus.CORRECTED
        residual = x + out.estimate
        assert residual
        combo = code2.complex.d2.echelon().express(residual)
        assert combo is not None and len(combo) == 2
        assert judge(code2, x, out)

    def test_syndrome_consistency_random(self, code2):
        rng = np.random.default_rng(3)
        for _ in range(100):
            x = sample_error(code2, 0.06, rng)
            s = color_syndrome(code2, x)
            out = decode_color(code2, s)
            if out.estimate is not None:
                assert color_syndrome(code2, out.estimate) == s

    def test_weight_accounting(self, code2):
        rng = np.random.default_rng(5)
        for _ in range(60):
            x = sample_error(code2, 0.08, rng)
            out = decode_color(code2, color_syndrome(code2, x))
            assert out.combined_boundary_weight <= sum(out.per_color_weights)

    def test_invalid_syndrome_rejected(self, code2):
        with pytest.raises(InvalidSyndrome):
            decode_color(code2, chain(code2.hypergraph.num_vertices, 0))

    def test_dimension_mismatch(self, code2):
        with pytest.raises(DimensionMismatch):
            decode_color(code2, BinaryChain.zero(3))

    def test_injected_decoder_path_matches_default(self, code2):
        rng = np.random.default_rng(11)
        for _ in range(30):
            x = sample_error(code2, 0.05, rng)
            s = color_syndrome(code2, x)
            a = decode_color(code2, s)
            b = decode_color(code2, s, surface_decoder=matching_surface_decoder)
            assert a.status == b.status
            assert a.estimate == b.estimate


class TestJudge:
    def test_exact_estimate(self, code2):
        x = chain(code2.n, 4, 9)
        out = decode_color(code2, color_syndrome(code2, x))
        assert judge(code2, x, out)

    def test_stabilizer_equivalent_estimate(self, code2):
        from tricolor.decode import DecodeOutcome
        x = chain(code2.n, 4, 9)
        stab = code2.complex.d2.row(3)
        fake = DecodeOutcome(DecodeStatus.CORRECTED, x + stab, (0, 0, 0), 0)
        assert judge(code2, x, fake)

    def test_single_hyperedge_offset_fails(self, code2):
        from tricolor.decode import DecodeOutcome
        x = chain(code2.n, 4, 9)
        fake = DecodeOutcome(DecodeStatus.CORRECTED,
                             x + chain(code2.n, 0), (0, 0, 0), 0)
        assert not judge(code2, x, fake)

    def test_heralded_is_failure(self, code2):
        from tricolor.decode import DecodeOutcome
        x = chain(code2.n, 4)
        out = DecodeOutcome(DecodeStatus.HERALDED_NO_LIFTING, None, (0, 0, 0), 0)
        assert not judge(code2, x, out)

    def test_dimension_check(self, code2):
        from tricolor.decode import DecodeOutcome
        out = DecodeOutcome(DecodeStatus.CORRECTED,
                            BinaryChain.zero(code2.n), (0, 0, 0), 0)
        with pytest.raises(DimensionMismatch):
            judge(code2, BinaryChain.zero(1), out)


class TestCosetCorrectnessGuarantee:
    """Whenever each surface estimate is coset-correct, the decoder must
    not herald and the judge must report success."""

    @pytest.mark.parametrize("r", [1, 2])
    def test_injected_coset_correct_estimates(self, r):
        code = build_color_code(r)
        sub_cx = [homology_complex(code.projections[c].subtiling)
                  for c in COLORS]
        rng = np.random.default_rng(23)
        for _ in range(200):
            x = sample_error(code, 0.10, rng)

            def coset_correct(subtiling, s_c, _x=x):
                c = next(c for c in COLORS
                         if code.projections[c].subtiling is subtiling)
                true_projection = project_error(code.projections[c], _x)
                nfaces = subtiling.num_faces
                k = int(rng.integers(0, nfaces + 1))
                faces = BinaryChain(nfaces, tuple(sorted(
                    rng.choice(nfaces, size=k, replace=False).tolist())))
                stab = sub_cx[c].d2.apply_to(faces)
                return true_projection + stab

            out = decode_color(code, color_syndrome(code, x),
                               surface_decoder=coset_correct)
            assert out.status is DecodeStatus.CORRECTED
            assert judge(code, x, out)
