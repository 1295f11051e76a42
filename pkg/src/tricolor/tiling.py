"""Surface tilings: the triangular torus family, duals, and the
monochromatic subtilings that carry the three projected surface codes.

Conventions fixed here and relied on everywhere else:

* torus coordinates (a, b) with 0 <= a, b < 3r map to vertex index a*3r + b;
* triangle faces are enumerated per vertex, "up" then "down", which fixes
  the qubit numbering of the color code;
* a dual tiling reuses the primal edge indexing verbatim.
"""

from __future__ import annotations

import io
from typing import Sequence

import numpy as np

from tricolor.complexes import TwoComplex
from tricolor.gf2 import BinaryMatrix

RED, GREEN, BLUE = 0, 1, 2
COLORS = (RED, GREEN, BLUE)
COLOR_LETTERS = "RGB"


class TilingError(ValueError):
    """A structure that is not a valid closed-surface tiling."""


class SurfaceTiling:
    """A tiling (V, E, F) of a closed surface.

    Vertices are 0..num_vertices-1.  Edges are vertex pairs (u < v), faces
    are sorted tuples of edge indices whose boundary vanishes.  Subtilings
    additionally carry back-references into their parent tiling.
    """

    def __init__(self, num_vertices: int,
                 edges: Sequence[tuple[int, int]],
                 faces: Sequence[Sequence[int]],
                 vertex_colors: Sequence[int] | None = None,
                 parent_vertex: Sequence[int] | None = None,
                 parent_edge: Sequence[int] | None = None,
                 parent_face_center: Sequence[int] | None = None):
        self.num_vertices = int(num_vertices)
        self.edges = tuple((int(u), int(v)) if u < v else (int(v), int(u))
                           for u, v in edges)
        self.faces = tuple(tuple(sorted(int(e) for e in face)) for face in faces)
        self.vertex_colors = None if vertex_colors is None else tuple(
            int(c) for c in vertex_colors)
        self.parent_vertex = None if parent_vertex is None else tuple(parent_vertex)
        self.parent_edge = None if parent_edge is None else tuple(parent_edge)
        self.parent_face_center = (None if parent_face_center is None
                                   else tuple(parent_face_center))
        self._adjacency = None
        self._edge_faces = None
        self._vertex_faces = None
        self._edge_index = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SurfaceTiling)
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
            and self.faces == other.faces
            and self.vertex_colors == other.vertex_colors
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (f"SurfaceTiling(V={self.num_vertices}, E={self.num_edges}, "
                f"F={self.num_faces})")

    # -- derived incidence structure, built lazily ------------------------

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge index), neighbors ascending."""
        if self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
            for e, (u, v) in enumerate(self.edges):
                adj[u].append((v, e))
                adj[v].append((u, e))
            for entry in adj:
                entry.sort()
            self._adjacency = adj
        return self._adjacency

    def edge_faces(self) -> list[list[int]]:
        """Faces incident to each edge."""
        if self._edge_faces is None:
            incident: list[list[int]] = [[] for _ in range(self.num_edges)]
            for f, face in enumerate(self.faces):
                for e in face:
                    incident[e].append(f)
            self._edge_faces = incident
        return self._edge_faces

    def vertex_faces(self) -> list[list[int]]:
        """Faces whose boundary touches each vertex."""
        if self._vertex_faces is None:
            incident: list[list[int]] = [[] for _ in range(self.num_vertices)]
            for f, face in enumerate(self.faces):
                for v in self.face_vertices(f):
                    incident[v].append(f)
            self._vertex_faces = incident
        return self._vertex_faces

    def edge_index(self) -> dict[tuple[int, int], int]:
        if self._edge_index is None:
            self._edge_index = {pair: e for e, pair in enumerate(self.edges)}
        return self._edge_index

    def face_vertices(self, f: int) -> tuple[int, ...]:
        seen: set[int] = set()
        for e in self.faces[f]:
            seen.update(self.edges[e])
        return tuple(sorted(seen))

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def edge_color(self, e: int) -> int:
        """The color absent from the edge's endpoints."""
        if self.vertex_colors is None:
            raise TilingError("tiling has no vertex coloring")
        u, v = self.edges[e]
        cu, cv = self.vertex_colors[u], self.vertex_colors[v]
        if cu == cv:
            raise TilingError(f"edge {e} is monochromatic: improper coloring")
        return 3 - cu - cv

    def strip_colors(self) -> "SurfaceTiling":
        return SurfaceTiling(self.num_vertices, self.edges, self.faces)


def validate_tiling(t: SurfaceTiling) -> None:
    """Raise TilingError unless t is a connected closed-surface tiling
    with no loops or multiple edges (and a proper coloring, if colored)."""
    seen_pairs: set[tuple[int, int]] = set()
    for e, (u, v) in enumerate(t.edges):
        if u == v:
            raise TilingError(f"edge {e} is a loop")
        if not (0 <= u < t.num_vertices and 0 <= v < t.num_vertices):
            raise TilingError(f"edge {e} has an endpoint out of range")
        if (u, v) in seen_pairs:
            raise TilingError(f"edge {e} duplicates {(u, v)}")
        seen_pairs.add((u, v))

    for f, face in enumerate(t.faces):
        if not face:
            raise TilingError(f"face {f} is empty")
        if len(set(face)) != len(face):
            raise TilingError(f"face {f} repeats an edge")
        touched: dict[int, int] = {}
        for e in face:
            if not 0 <= e < t.num_edges:
                raise TilingError(f"face {f} references edge {e} out of range")
            for w in t.edges[e]:
                touched[w] = touched.get(w, 0) + 1
        odd = [w for w, cnt in touched.items() if cnt % 2]
        if odd:
            raise TilingError(f"face {f} is not closed at vertices {odd}")

    for e, incident in enumerate(t.edge_faces()):
        if len(incident) != 2:
            raise TilingError(
                f"edge {e} lies on {len(incident)} faces, expected 2"
            )

    if t.euler_characteristic() % 2:
        raise TilingError(
            f"Euler characteristic {t.euler_characteristic()} is odd"
        )

    if t.num_vertices and not _connected(t):
        raise TilingError("tiling is not connected")

    if t.vertex_colors is not None:
        if len(t.vertex_colors) != t.num_vertices:
            raise TilingError("vertex_colors length mismatch")
        if any(c not in COLORS for c in t.vertex_colors):
            raise TilingError("vertex colors must be in {R, G, B}")
        for e, (u, v) in enumerate(t.edges):
            if t.vertex_colors[u] == t.vertex_colors[v]:
                raise TilingError(f"edge {e} joins two {COLOR_LETTERS[t.vertex_colors[u]]} vertices")


def _connected(t: SurfaceTiling) -> bool:
    if t.num_vertices == 0:
        return True
    adj = t.adjacency()
    seen = np.zeros(t.num_vertices, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        for w, _ in adj[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return bool(seen.all())


def cayley_triangular(r: int) -> SurfaceTiling:
    """Triangular tiling of the torus: the Cayley graph of Z_3r x Z_3r with
    generators +-(1,0), +-(0,1), +-(1,-1), with its canonical 3-coloring
    (a + 2b) mod 3 and the up/down triangle faces."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    side = 3 * r

    def vid(a: int, b: int) -> int:
        return (a % side) * side + (b % side)

    edges = []
    for a in range(side):
        for b in range(side):
            # generator order (1,0), (0,1), (1,-1): edge id = 3*vid + k
            edges.append(tuple(sorted((vid(a, b), vid(a + 1, b)))))
            edges.append(tuple(sorted((vid(a, b), vid(a, b + 1)))))
            edges.append(tuple(sorted((vid(a, b), vid(a + 1, b - 1)))))

    def gen_edge(a: int, b: int, k: int) -> int:
        return 3 * vid(a, b) + k

    faces = []
    for a in range(side):
        for b in range(side):
            # up triangle {v, v+(1,0), v+(0,1)}
            faces.append((gen_edge(a, b, 0), gen_edge(a, b, 1), gen_edge(a, b + 1, 2)))
            # down triangle {v, v+(1,0), v+(1,-1)}
            faces.append((gen_edge(a, b, 0), gen_edge(a, b, 2), gen_edge(a + 1, b - 1, 1)))

    colors = [(a + 2 * b) % 3 for a in range(side) for b in range(side)]
    t = SurfaceTiling(side * side, edges, faces, vertex_colors=colors)
    validate_tiling(t)
    if t.euler_characteristic() != 0:
        raise TilingError("triangular torus tiling must have Euler characteristic 0")
    return t


def dual_tiling(t: SurfaceTiling) -> SurfaceTiling:
    """The dual tiling: vertices <-> faces, identical edge indexing,
    dual faces <-> primal vertices (in primal index order, so that the
    double dual is the identity on indices)."""
    validate_tiling(t)
    dual_edges = []
    for e in range(t.num_edges):
        f1, f2 = t.edge_faces()[e]
        if f1 == f2:
            raise TilingError(f"dual of edge {e} would be a loop")
        dual_edges.append((f1, f2))
    if len(set(tuple(sorted(p)) for p in dual_edges)) != len(dual_edges):
        raise TilingError("dual tiling would contain multiple edges")

    dual_faces = []
    for v in range(t.num_vertices):
        dual_faces.append(tuple(sorted(e for _, e in t.adjacency()[v])))

    out = SurfaceTiling(t.num_faces, dual_edges, dual_faces)
    validate_tiling(out)
    return out


def color_subtiling(gstar: SurfaceTiling, color: int) -> SurfaceTiling:
    """The tiling induced by the edges of one color in a 3-colored
    triangulation.  Vertices are the two other color classes; faces are the
    monochromatic cycles around each vertex of the given color.

    The result carries back-references: parent_vertex and parent_edge map
    subtiling indices to gstar indices, parent_face_center maps each face
    to the gstar vertex it surrounds.
    """
    if color not in COLORS:
        raise ValueError(f"color must be one of {COLORS}")
    if gstar.vertex_colors is None:
        raise TilingError("subtiling requires a vertex-colored tiling")

    parent_vertex = [v for v in range(gstar.num_vertices)
                     if gstar.vertex_colors[v] != color]
    vmap = {pv: i for i, pv in enumerate(parent_vertex)}

    parent_edge = [e for e in range(gstar.num_edges)
                   if gstar.edge_color(e) == color]
    emap = {pe: i for i, pe in enumerate(parent_edge)}
    sub_edges = [(vmap[gstar.edges[pe][0]], vmap[gstar.edges[pe][1]])
                 for pe in parent_edge]

    faces = []
    centers = []
    for w in range(gstar.num_vertices):
        if gstar.vertex_colors[w] != color:
            continue
        cycle = []
        for f in gstar.vertex_faces()[w]:
            opposite = [e for e in gstar.faces[f] if w not in gstar.edges[e]]
            if len(opposite) != 1:
                raise TilingError(f"face {f} is not a triangle")
            e = opposite[0]
            if gstar.edge_color(e) != color:
                raise TilingError(
                    f"edge opposite vertex {w} in face {f} is not "
                    f"{COLOR_LETTERS[color]}-colored"
                )
            cycle.append(emap[e])
        faces.append(tuple(sorted(cycle)))
        centers.append(w)

    sub_colors = [gstar.vertex_colors[pv] for pv in parent_vertex]
    out = SurfaceTiling(len(parent_vertex), sub_edges, faces,
                        vertex_colors=sub_colors,
                        parent_vertex=parent_vertex,
                        parent_edge=parent_edge,
                        parent_face_center=centers)
    try:
        validate_tiling(out)
    except TilingError as exc:
        raise TilingError(
            f"{COLOR_LETTERS[color]} subtiling is degenerate (short "
            f"non-boundary cycles in the parent): {exc}"
        ) from exc
    return out


def homology_complex(t: SurfaceTiling) -> TwoComplex:
    """The cellular homology complex: d2 row f = edge set of face f,
    d1 row e = endpoints of edge e."""
    validate_tiling(t)
    d2 = BinaryMatrix(t.num_faces, t.num_edges, t.faces)
    d1 = BinaryMatrix(t.num_edges, t.num_vertices,
                      [tuple(sorted(pair)) for pair in t.edges])
    return TwoComplex(d2, d1)


# -- tiling interchange file ----------------------------------------------

def save_tiling(t: SurfaceTiling, path_or_file) -> None:
    """Write the `tiling v1` text format."""
    own = isinstance(path_or_file, (str, bytes))
    fh = open(path_or_file, "w") if own else path_or_file
    try:
        fh.write("tiling v1\n")
        fh.write(f"vertices {t.num_vertices}\n")
        fh.write(f"edges {t.num_edges}\n")
        for u, v in t.edges:
            fh.write(f"{u} {v}\n")
        fh.write(f"faces {t.num_faces}\n")
        for face in t.faces:
            fh.write(" ".join(str(e) for e in face) + "\n")
        if t.vertex_colors is not None:
            letters = "".join(COLOR_LETTERS[c] for c in t.vertex_colors)
            fh.write(f"vertex_colors {letters}\n")
    finally:
        if own:
            fh.close()


def load_tiling(path_or_file) -> SurfaceTiling:
    own = isinstance(path_or_file, (str, bytes))
    fh = open(path_or_file, "r") if own else path_or_file
    try:
        lines = [ln.rstrip("\n") for ln in fh]
    finally:
        if own:
            fh.close()
    pos = 0

    def expect(prefix: str) -> str:
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(prefix):
            raise TilingError(f"expected '{prefix}' at line {pos + 1}")
        value = lines[pos][len(prefix):].strip()
        pos += 1
        return value

    if expect("tiling ") != "v1":
        raise TilingError("unsupported tiling format version")
    nv = int(expect("vertices "))
    ne = int(expect("edges "))
    edges = []
    for _ in range(ne):
        u, v = lines[pos].split()
        edges.append((int(u), int(v)))
        pos += 1
    nf = int(expect("faces "))
    faces = []
    for _ in range(nf):
        faces.append(tuple(int(tok) for tok in lines[pos].split()))
        pos += 1
    colors = None
    if pos < len(lines) and lines[pos].startswith("vertex_colors "):
        letters = lines[pos][len("vertex_colors "):].strip()
        if len(letters) != nv:
            raise TilingError("vertex_colors length mismatch")
        colors = [COLOR_LETTERS.index(ch) for ch in letters]
        pos += 1
    t = SurfaceTiling(nv, edges, faces, vertex_colors=colors)
    validate_tiling(t)
    return t


def save_tiling_str(t: SurfaceTiling) -> str:
    buf = io.StringIO()
    save_tiling(t, buf)
    return buf.getvalue()


def load_tiling_str(text: str) -> SurfaceTiling:
    return load_tiling(io.StringIO(text))
