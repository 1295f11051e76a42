"""Lifting a boundary: given an edge set B of a graph G, find a vertex set
X with cut boundary exactly B, or report that none exists.

Remove B from G and contract each connected component of what remains;
B's edges connect these components.  X exists iff that components graph is
two-colorable, and then the two color classes of vertices are the only two
solutions, complementary to each other.  We return the smaller one (ties
toward the set containing vertex 0), a deterministic choice; the two differ
by the all-vertices set, so the choice never affects correctness downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tricolor._blossom import njit
from tricolor.gf2 import BinaryChain
from tricolor.tiling import SurfaceTiling


@njit(cache=True)
def _components_and_bipartition(nv, edge_u, edge_v, in_b):
    """Union-find over the non-B edges, then 2-color the components graph.

    Returns (ok, side) where side[v] is the component color of vertex v;
    ok = 0 means the components graph has an odd cycle (no lifting).
    """
    parent = np.arange(nv)
    for e in range(edge_u.shape[0]):
        if in_b[e]:
            continue
        a = edge_u[e]
        b = edge_v[e]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    root = np.empty(nv, np.int64)
    for v in range(nv):
        a = v
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        root[v] = a

    # canonical component ids 0..kappa-1 in order of smallest vertex
    comp = np.full(nv, -1, np.int64)
    kappa = 0
    for v in range(nv):
        if root[v] == v:
            comp[v] = kappa
            kappa += 1
    cid = np.empty(nv, np.int64)
    for v in range(nv):
        cid[v] = comp[root[v]]

    # component graph edges from B; self-loop = immediate failure
    nb = 0
    for e in range(edge_u.shape[0]):
        if in_b[e]:
            nb += 1
    ce_u = np.empty(nb, np.int64)
    ce_v = np.empty(nb, np.int64)
    k = 0
    for e in range(edge_u.shape[0]):
        if in_b[e]:
            a = cid[edge_u[e]]
            b = cid[edge_v[e]]
            if a == b:
                return 0, cid
            ce_u[k] = a
            ce_v[k] = b
            k += 1

    # CSR adjacency of the components graph
    counts = np.zeros(kappa + 1, np.int64)
    for e in range(nb):
        counts[ce_u[e] + 1] += 1
        counts[ce_v[e] + 1] += 1
    for i in range(kappa):
        counts[i + 1] += counts[i]
    fill = counts[:kappa].copy()
    adj = np.empty(2 * nb, np.int64)
    for e in range(nb):
        adj[fill[ce_u[e]]] = ce_v[e]
        fill[ce_u[e]] += 1
        adj[fill[ce_v[e]]] = ce_u[e]
        fill[ce_v[e]] += 1

    color = np.full(kappa, -1, np.int64)
    queue = np.empty(kappa, np.int64)
    for start in range(kappa):
        if color[start] != -1:
            continue
        color[start] = 0
        queue[0] = start
        head = 0
        tail = 1
        while head < tail:
            c = queue[head]
            head += 1
            for k2 in range(counts[c], counts[c + 1]):
                d = adj[k2]
                if color[d] == -1:
                    color[d] = 1 - color[c]
                    queue[tail] = d
                    tail += 1
                elif color[d] == color[c]:
                    return 0, cid

    side = np.empty(nv, np.int64)
    for v in range(nv):
        side[v] = color[cid[v]]
    return 1, side


@dataclass(frozen=True)
class ComponentsGraph:
    """Connected components of G with B removed, and which pairs of
    components the B edges join."""

    component_of: tuple[int, ...]
    adjacency: frozenset
    num_components: int


def _edge_arrays(g: SurfaceTiling) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(g.edges, dtype=np.int64)
    if arr.size == 0:
        return (np.empty(0, dtype=np.int64),) * 2
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])


def components_graph(g: SurfaceTiling, b: BinaryChain) -> ComponentsGraph:
    """The components graph of G with the edges of b deleted."""
    if b.dimension != g.num_edges:
        raise ValueError("boundary chain dimension does not match edge count")
    edge_u, edge_v = _edge_arrays(g)
    in_b = np.zeros(g.num_edges, dtype=np.uint8)
    for e in b.support:
        in_b[e] = 1
    parent = list(range(g.num_vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(g.num_edges):
        if not in_b[e]:
            ra, rb = find(int(edge_u[e])), find(int(edge_v[e]))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    comp_id: dict[int, int] = {}
    component_of = []
    for v in range(g.num_vertices):
        r = find(v)
        if r not in comp_id:
            comp_id[r] = len(comp_id)
        component_of.append(comp_id[r])
    adjacency = frozenset(
        frozenset((component_of[int(edge_u[e])], component_of[int(edge_v[e])]))
        for e in b.support
    )
    return ComponentsGraph(tuple(component_of), adjacency, len(comp_id))


def lift_boundary(g: SurfaceTiling, b: BinaryChain) -> BinaryChain | None:
    """A vertex set X with boundary(X) = b, or None if b is not a cut
    boundary (heralded NO LIFTING).  Returns the smaller of the two
    complementary solutions; ties go to the side containing vertex 0."""
    if b.dimension != g.num_edges:
        raise ValueError("boundary chain dimension does not match edge count")
    edge_u, edge_v = _edge_arrays(g)
    in_b = np.zeros(g.num_edges, dtype=np.uint8)
    for e in b.support:
        in_b[e] = 1
    ok, side = _components_and_bipartition(g.num_vertices, edge_u, edge_v, in_b)
    if not ok:
        return None
    x = _pick_smaller_side(side)
    return BinaryChain(g.num_vertices, tuple(np.nonzero(x)[0].tolist()))


def _pick_smaller_side(side: np.ndarray) -> np.ndarray:
    ones = int(side.sum())
    zeros = side.shape[0] - ones
    if ones < zeros:
        return side == 1
    if zeros < ones:
        return side == 0
    return side == side[0]


def lift_boundary_arrays(g: SurfaceTiling, edge_u, edge_v,
                         in_b: np.ndarray) -> np.ndarray | None:
    """Hot-path variant over prebuilt arrays: vertex index array or None."""
    ok, side = _components_and_bipartition(g.num_vertices, edge_u, edge_v, in_b)
    if not ok:
        return None
    return np.nonzero(_pick_smaller_side(side))[0].astype(np.int64)


def boundary_of_vertexset(g: SurfaceTiling, x: BinaryChain) -> BinaryChain:
    """Edges with exactly one endpoint in x."""
    if x.dimension != g.num_vertices:
        raise ValueError("vertex chain dimension does not match vertex count")
    inx = np.zeros(g.num_vertices, dtype=bool)
    for v in x.support:
        inx[v] = True
    support = [e for e, (u, v) in enumerate(g.edges) if inx[u] != inx[v]]
    return BinaryChain(g.num_edges, tuple(support))
