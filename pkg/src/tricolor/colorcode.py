"""Color codes as hypergraph 2-complexes.

A 3-colored triangulation G* is read as a 3-uniform hypergraph: vertices
stay vertices, each triangle face becomes a hyperedge (one vertex of each
color), and the hyperedges around a vertex form a hyperface.  Qubits sit on
hyperedges; since hyperedge index = face index of G* = vertex index of the
dual graph G, the lifting step can hand back vertices of G and have them
mean hyperedges with no translation.
"""

from __future__ import annotations

from dataclasses import dataclass

from tricolor import complexes
from tricolor.complexes import CssCode, TwoComplex, css_from_complex
from tricolor.gf2 import BinaryChain, BinaryMatrix
from tricolor.projection import ProjectionTable, build_projection
from tricolor.tiling import (
    COLORS,
    SurfaceTiling,
    TilingError,
    cayley_triangular,
    color_subtiling,
    dual_tiling,
)


class Hypergraph:
    """The hypergraph of a 3-colored triangulation, with its hyperfaces."""

    def __init__(self, gstar: SurfaceTiling, g: SurfaceTiling,
                 hyperedges: tuple[tuple[int, int, int], ...],
                 hyperfaces: tuple[tuple[int, ...], ...]):
        self.gstar = gstar
        self.g = g
        self.num_vertices = gstar.num_vertices
        self.vertex_colors = gstar.vertex_colors
        self.hyperedges = hyperedges
        self.hyperfaces = hyperfaces

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)

    @property
    def num_hyperfaces(self) -> int:
        return len(self.hyperfaces)

    def __repr__(self) -> str:
        return (f"Hypergraph(|V|={self.num_vertices}, "
                f"|E|={self.num_hyperedges}, |F|={self.num_hyperfaces})")


def hypergraph_from_dual(gstar: SurfaceTiling) -> Hypergraph:
    """Read a properly 3-colored triangulation as a hypergraph.

    Hyperedge i is the vertex triple of face i of gstar; hyperface v is the
    set of faces incident to vertex v.
    """
    if gstar.vertex_colors is None:
        raise TilingError("hypergraph construction needs a 3-colored tiling")

    hyperedges = []
    for f in range(gstar.num_faces):
        verts = gstar.face_vertices(f)
        if len(verts) != 3:
            raise TilingError(f"face {f} has {len(verts)} vertices, not 3")
        colors = sorted(gstar.vertex_colors[v] for v in verts)
        if colors != list(COLORS):
            raise TilingError(
                f"face {f} does not carry one vertex of each color"
            )
        hyperedges.append(verts)

    hyperfaces = tuple(tuple(sorted(gstar.vertex_faces()[v]))
                       for v in range(gstar.num_vertices))

    g = dual_tiling(gstar)
    return Hypergraph(gstar, g, tuple(hyperedges), hyperfaces)


def hypergraph_complex(h: Hypergraph) -> TwoComplex:
    """d2 row = hyperedges of a hyperface; d1 row = vertices of a hyperedge."""
    d2 = BinaryMatrix(h.num_hyperfaces, h.num_hyperedges, h.hyperfaces)
    d1 = BinaryMatrix(h.num_hyperedges, h.num_vertices, h.hyperedges)
    return TwoComplex(d2, d1)


@dataclass(frozen=True, eq=False)
class ColorCode:
    """A color code with everything the decoder needs precomputed.

    Compared by identity: one built code is shared read-only everywhere.
    """

    hypergraph: Hypergraph
    complex: TwoComplex
    css: CssCode
    projections: tuple[ProjectionTable, ProjectionTable, ProjectionTable]

    @property
    def n(self) -> int:
        return self.css.n

    @property
    def k(self) -> int:
        return self.css.k

    @property
    def gstar(self) -> SurfaceTiling:
        return self.hypergraph.gstar

    @property
    def g(self) -> SurfaceTiling:
        return self.hypergraph.g

    def subtiling(self, color: int) -> SurfaceTiling:
        return self.projections[color].subtiling


def color_code_from_tiling(gstar: SurfaceTiling) -> ColorCode:
    """Color code of any properly 3-colored triangulation."""
    h = hypergraph_from_dual(gstar)
    cx = hypergraph_complex(h)
    css = css_from_complex(cx)
    projections = tuple(
        build_projection(h, color_subtiling(gstar, c), c) for c in COLORS
    )
    code = ColorCode(hypergraph=h, complex=cx, css=css, projections=projections)
    # Warm the stabilizer echelon now: decoding judges against it per trial.
    cx.d2.echelon()
    return code


def build_color_code(r: int) -> ColorCode:
    """The hexagonal color code of the triangular torus family, n = 18r^2."""
    return color_code_from_tiling(cayley_triangular(r))


def color_syndrome(code: ColorCode, x: BinaryChain) -> BinaryChain:
    """Terminal vertices of a hyperedge chain."""
    return complexes.syndrome(code.complex, x)


def is_color_stabilizer(code: ColorCode, x: BinaryChain) -> bool:
    return complexes.is_stabilizer(code.complex, x)
