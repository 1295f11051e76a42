import numpy as np
import pytest

from tricolor import complexes
from tricolor.colorcode import build_color_code, color_syndrome
from tricolor.gf2 import BinaryChain, DimensionMismatch
from tricolor.projection import (
    project_error,
    project_stabilizer,
    project_syndrome,
    recombine,
)
from tricolor.tiling import COLORS, homology_complex

from oracles import dense_rank_gf2


@pytest.fixture(scope="module", params=[1, 2])
def code(request):
    return build_color_code(request.param)


def random_chain(rng, dim, max_weight=8):
    k = int(rng.integers(0, max_weight + 1))
    support = rng.choice(dim, size=min(k, dim), replace=False)
    return BinaryChain(dim, tuple(sorted(int(i) for i in support)))


class TestTableShape:
    def test_edge_map_two_to_one(self, code):
        for c in COLORS:
            t = code.projections[c]
            counts = np.bincount(t.edge_map, minlength=t.subtiling.num_edges)
            assert (counts == 2).all()

    def test_vertex_map_injective_on_other_classes(self, code):
        for c in COLORS:
            t = code.projections[c]
            kept = t.vertex_map[t.vertex_map >= 0]
            assert len(set(kept.tolist())) == len(kept) == t.subtiling.num_vertices
            dropped = np.nonzero(t.vertex_map < 0)[0]
            assert all(code.gstar.vertex_colors[v] == c for v in dropped)

    def test_face_map_exactly_on_matching_color(self, code):
        for c in COLORS:
            t = code.projections[c]
            for f, sub_f in enumerate(t.face_map):
                has_color = code.gstar.vertex_colors[f] == c
                assert (sub_f >= 0) == has_color


class TestProjectSyndrome:
    def test_drops_projection_color(self, code):
        t = code.projections[0]
        he = code.hypergraph.hyperedges[0]
        s = BinaryChain(code.hypergraph.num_vertices, he)
        out = project_syndrome(t, s)
        expect = sorted(int(t.vertex_map[v]) for v in he
                        if code.gstar.vertex_colors[v] != 0)
        assert list(out.support) == expect
        assert out.weight == 2

    def test_single_color_vertex_projects_to_zero(self, code):
        c = 1
        t = code.projections[c]
        v = next(v for v in range(code.hypergraph.num_vertices)
                 if code.gstar.vertex_colors[v] == c)
        s = BinaryChain(code.hypergraph.num_vertices, (v,))
        assert not project_syndrome(t, s)

    def test_zero(self, code):
        t = code.projections[2]
        assert not project_syndrome(t, BinaryChain.zero(code.hypergraph.num_vertices))

    def test_dimension_check(self, code):
        with pytest.raises(DimensionMismatch):
            project_syndrome(code.projections[0], BinaryChain.zero(1))


class TestProjectError:
    def test_single_hyperedge_lands_on_its_colored_edge(self, code):
        t = code.projections[0]
        out = project_error(t, BinaryChain(code.n, (4,)))
        assert out.weight == 1
        parent_edge = t.parent_edge[out.support[0]]
        assert code.gstar.edge_color(parent_edge) == 0

    def test_hyperedge_pair_over_same_edge_cancels(self, code):
        t = code.projections[1]
        pair = np.nonzero(t.edge_map == 0)[0]
        assert pair.shape[0] == 2
        x = BinaryChain(code.n, tuple(int(i) for i in pair))
        assert not project_error(t, x)

    def test_prop4_recombination_identity(self, code):
        # summed projections equal the edge boundary of x seen as faces of
        # the parent tiling
        rng = np.random.default_rng(11)
        gstar = code.gstar
        for _ in range(20):
            x = random_chain(rng, code.n)
            combined = recombine(
                code.projections,
                *(project_error(code.projections[c], x) for c in COLORS))
            acc = np.zeros(gstar.num_edges, dtype=np.uint8)
            for f in x.support:
                for e in gstar.faces[f]:
                    acc[e] ^= 1
            assert combined.support == tuple(np.nonzero(acc)[0].tolist())

    def test_exhaustive_weight_two(self):
        code = build_color_code(1)
        gstar = code.gstar
        for e1 in range(code.n):
            for e2 in range(e1 + 1, code.n):
                x = BinaryChain(code.n, (e1, e2))
                combined = recombine(
                    code.projections,
                    *(project_error(code.projections[c], x) for c in COLORS))
                acc = np.zeros(gstar.num_edges, dtype=np.uint8)
                for f in (e1, e2):
                    for e in gstar.faces[f]:
                        acc[e] ^= 1
                assert combined.support == tuple(np.nonzero(acc)[0].tolist())


class TestProjectStabilizer:
    def test_matching_color_center_gives_face_cycle(self, code):
        c = 0
        t = code.projections[c]
        center = next(v for v in range(code.hypergraph.num_vertices)
                      if code.gstar.vertex_colors[v] == c)
        out = project_stabilizer(t, center)
        sub_f = int(t.face_map[center])
        assert out.support == t.subtiling.faces[sub_f]
        assert out.weight == 6

    def test_other_color_center_gives_zero(self, code):
        t = code.projections[1]
        center = next(v for v in range(code.hypergraph.num_vertices)
                      if code.gstar.vertex_colors[v] == 0)
        assert not project_stabilizer(t, center)

    def test_sum_over_all_centers_vanishes(self, code):
        for c in COLORS:
            t = code.projections[c]
            acc = BinaryChain.zero(t.subtiling.num_edges)
            for f in range(code.hypergraph.num_hyperfaces):
                acc = acc + project_stabilizer(t, f)
            assert not acc

    def test_bad_index(self, code):
        with pytest.raises(IndexError):
            project_stabilizer(code.projections[0], code.hypergraph.num_hyperfaces)


class TestRecombine:
    def test_zeros(self, code):
        zeros = [BinaryChain.zero(code.projections[c].subtiling.num_edges)
                 for c in COLORS]
        assert not recombine(code.projections, *zeros)

    def test_single_edge_embeds(self, code):
        t = code.projections[0]
        b = BinaryChain(t.subtiling.num_edges, (3,))
        zeros = [BinaryChain.zero(code.projections[c].subtiling.num_edges)
                 for c in (1, 2)]
        out = recombine(code.projections, b, *zeros)
        assert out.support == (int(t.parent_edge[3]),)

    def test_weights_add(self, code):
        rng = np.random.default_rng(2)
        chains = [random_chain(rng, code.projections[c].subtiling.num_edges, 5)
                  for c in COLORS]
        out = recombine(code.projections, *chains)
        assert out.weight == sum(ch.weight for ch in chains)


class TestMorphism:
    """The two commuting squares, exhaustively on basis vectors."""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_square_one_syndrome_of_projection(self, r):
        code = build_color_code(r)
        for c in COLORS:
            t = code.projections[c]
            sub_cx = homology_complex(t.subtiling)
            for e in range(code.n):
                x = BinaryChain(code.n, (e,))
                lhs = complexes.syndrome(sub_cx, project_error(t, x))
                rhs = project_syndrome(t, color_syndrome(code, x))
                assert lhs == rhs

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_square_two_stabilizer_boundaries(self, r):
        code = build_color_code(r)
        for c in COLORS:
            t = code.projections[c]
            sub_cx = homology_complex(t.subtiling)
            for f in range(code.hypergraph.num_hyperfaces):
                face_chain = project_stabilizer(t, f)
                hyperface_boundary = code.complex.d2.row(f)
                assert face_chain == project_error(t, hyperface_boundary)
                # and the face chain really is the subtiling face boundary
                sub_f = int(t.face_map[f])
                if sub_f >= 0:
                    one = BinaryChain(t.subtiling.num_faces, (sub_f,))
                    assert sub_cx.d2.apply_to(one) == face_chain

    def test_prop3_on_random_errors(self):
        code = build_color_code(2)
        rng = np.random.default_rng(17)
        for _ in range(40):
            x = random_chain(rng, code.n)
            s = color_syndrome(code, x)
            for c in COLORS:
                t = code.projections[c]
                sub_cx = homology_complex(t.subtiling)
                assert complexes.syndrome(sub_cx, project_error(t, x)) == \
                    project_syndrome(t, s)

    @pytest.mark.parametrize("r", [1, 2])
    def test_projection_kernel_rank(self, r):
        # stacked projection matrix has rank |hyperedges| - 1: the kernel is
        # exactly {0, sum of all hyperedges}
        code = build_color_code(r)
        rows = []
        for c in COLORS:
            t = code.projections[c]
            block = np.zeros((code.n, t.subtiling.num_edges), dtype=np.uint8)
            for he in range(code.n):
                block[he, t.edge_map[he]] = 1
            rows.append(block)
        stacked = np.concatenate(rows, axis=1)
        assert dense_rank_gf2(stacked.T) == code.n - 1
        full = np.ones(code.n, dtype=np.uint8)
        assert not ((full @ stacked) % 2).any()
