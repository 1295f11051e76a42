"""Projection of the color-code complex onto the three monochromatic
surface-code complexes, and the inverse recombination of edge chains.

Each projection is materialized as three index tables at code-build time:

* vertex_map drops vertices of the projection color and re-indexes the rest;
* edge_map sends each hyperedge (a triangle of the parent tiling) to its
  unique edge of the projection color, two-to-one;
* face_map is defined exactly on hyperfaces centered on the projection
  color, landing on the subtiling face around the same center.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from tricolor.gf2 import BinaryChain, DimensionMismatch
from tricolor.tiling import COLOR_LETTERS, SurfaceTiling, TilingError

if TYPE_CHECKING:
    from tricolor.colorcode import Hypergraph


class ProjectionTable:
    """Index tables of one color's projection, plus its subtiling."""

    def __init__(self, color: int, subtiling: SurfaceTiling,
                 vertex_map: np.ndarray, edge_map: np.ndarray,
                 face_map: np.ndarray):
        self.color = color
        self.subtiling = subtiling
        self.vertex_map = vertex_map        # parent vertex -> sub vertex | -1
        self.edge_map = edge_map            # hyperedge -> sub edge
        self.face_map = face_map            # hyperface -> sub face | -1
        self.parent_vertex = np.asarray(subtiling.parent_vertex, dtype=np.int64)
        self.parent_edge = np.asarray(subtiling.parent_edge, dtype=np.int64)

    def __repr__(self) -> str:
        return f"ProjectionTable({COLOR_LETTERS[self.color]})"


def build_projection(h: "Hypergraph", subtiling: SurfaceTiling,
                     color: int) -> ProjectionTable:
    gstar = h.gstar
    vertex_map = np.full(gstar.num_vertices, -1, dtype=np.int64)
    for sub_v, parent_v in enumerate(subtiling.parent_vertex):
        vertex_map[parent_v] = sub_v

    edge_of_parent = np.full(gstar.num_edges, -1, dtype=np.int64)
    for sub_e, parent_e in enumerate(subtiling.parent_edge):
        edge_of_parent[parent_e] = sub_e

    edge_map = np.empty(h.num_hyperedges, dtype=np.int64)
    for he in range(h.num_hyperedges):
        # hyperedge index = face index of gstar; its unique edge of this color
        target = -1
        for e in gstar.faces[he]:
            if gstar.edge_color(e) == color:
                if target != -1:
                    raise TilingError(f"face {he} has two {COLOR_LETTERS[color]} edges")
                target = e
        if target == -1:
            raise TilingError(f"face {he} has no {COLOR_LETTERS[color]} edge")
        edge_map[he] = edge_of_parent[target]

    face_map = np.full(h.num_hyperfaces, -1, dtype=np.int64)
    for sub_f, center in enumerate(subtiling.parent_face_center):
        face_map[center] = sub_f

    return ProjectionTable(color, subtiling, vertex_map, edge_map, face_map)


def _check_dim(chain: BinaryChain, expected: int, what: str) -> None:
    if chain.dimension != expected:
        raise DimensionMismatch(
            f"{what} has dimension {chain.dimension}, expected {expected}"
        )


def project_syndrome(t: ProjectionTable, s: BinaryChain) -> BinaryChain:
    """Drop vertices of the projection color and re-index the rest."""
    _check_dim(s, len(t.vertex_map), "syndrome")
    kept = [int(t.vertex_map[v]) for v in s.support if t.vertex_map[v] >= 0]
    return BinaryChain(t.subtiling.num_vertices, tuple(sorted(kept)))


def project_error(t: ProjectionTable, x: BinaryChain) -> BinaryChain:
    """Push a hyperedge chain through edge_map with GF(2) accumulation:
    the two hyperedges over a common edge cancel."""
    _check_dim(x, len(t.edge_map), "error")
    out: set[int] = set()
    for he in x.support:
        out.symmetric_difference_update((int(t.edge_map[he]),))
    return BinaryChain(t.subtiling.num_edges, tuple(sorted(out)))


def project_stabilizer(t: ProjectionTable, f: int) -> BinaryChain:
    """Image of one hyperface: its monochromatic boundary cycle if the
    center carries the projection color, zero otherwise."""
    if not 0 <= f < len(t.face_map):
        raise IndexError(f"hyperface {f} out of range")
    sub_f = int(t.face_map[f])
    if sub_f < 0:
        return BinaryChain.zero(t.subtiling.num_edges)
    return BinaryChain(t.subtiling.num_edges, t.subtiling.faces[sub_f])


def recombine(tables: tuple[ProjectionTable, ProjectionTable, ProjectionTable],
              b_red: BinaryChain, b_green: BinaryChain,
              b_blue: BinaryChain) -> BinaryChain:
    """Embed three subtiling edge chains back into the parent edge space.

    The subtilings partition the parent edges, so this is a disjoint union
    and the weights add.
    """
    chains = (b_red, b_green, b_blue)
    parent_edges: list[int] = []
    for t, b in zip(tables, chains):
        _check_dim(b, t.subtiling.num_edges,
                   f"{COLOR_LETTERS[t.color]} boundary")
        parent_edges.extend(int(t.parent_edge[e]) for e in b.support)
    total_edges = sum(t.subtiling.num_edges for t in tables)
    return BinaryChain(total_edges, tuple(sorted(parent_edges)))
