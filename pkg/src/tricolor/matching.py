"""Surface-code decoding: exact minimum-weight perfect matching of the
syndrome defects over graph distances, then XOR of canonical shortest paths.

Distances are hop counts.  Per tiling, an all-pairs BFS table is computed
once and cached; the canonical shortest path between two vertices is the
one found by a breadth-first search from the smaller endpoint that explores
neighbors in increasing vertex index, with the first discoverer becoming
the predecessor.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from tricolor._blossom import min_weight_perfect_matching_array, njit
from tricolor.gf2 import BinaryChain
from tricolor.tiling import SurfaceTiling


@njit(cache=True)
def _bfs_all(indptr, nbr_vtx, dist, pred):
    """Canonical BFS from every source; adjacency must be index-sorted."""
    nv = indptr.shape[0] - 1
    queue = np.empty(nv, np.int64)
    for src in range(nv):
        drow = dist[src]
        prow = pred[src]
        for i in range(nv):
            drow[i] = -1
            prow[i] = -1
        drow[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = nbr_vtx[k]
                if drow[w] == -1:
                    drow[w] = drow[v] + 1
                    prow[w] = v
                    queue[tail] = w
                    tail += 1


@njit(cache=True)
def _xor_paths(defects, mate, pred, edge_id, acc):
    """XOR the canonical path of every matched defect pair into acc.

    acc is a uint8 counter per edge; wraparound is harmless because only
    the parity is read and 256 is even.
    """
    nd = defects.shape[0]
    for i in range(nd):
        j = mate[i]
        if j <= i:
            continue
        a = defects[i]
        b = defects[j]
        if b < a:
            a, b = b, a
        cur = b
        while cur != a:
            p = pred[a, cur]
            acc[edge_id[cur, p]] += 1
            cur = p


class _Tables:
    """Cached per-tiling BFS distances, predecessors and edge lookup."""

    def __init__(self, t: SurfaceTiling):
        nv = t.num_vertices
        counts = np.zeros(nv + 1, dtype=np.int64)
        for u, v in t.edges:
            counts[u + 1] += 1
            counts[v + 1] += 1
        indptr = np.cumsum(counts)
        nbr_vtx = np.empty(indptr[-1], dtype=np.int64)
        fill = indptr[:-1].copy()
        # adjacency() is sorted by neighbor index already
        for u in range(nv):
            for w, _e in t.adjacency()[u]:
                nbr_vtx[fill[u]] = w
                fill[u] += 1
        self.dist = np.empty((nv, nv), dtype=np.int16)
        self.pred = np.empty((nv, nv), dtype=np.int64)
        _bfs_all(indptr, nbr_vtx, self.dist, self.pred)
        if np.any(self.dist < 0):
            raise ValueError("tiling graph is disconnected")

        self.edge_id = np.full((nv, nv), -1, dtype=np.int64)
        for e, (u, v) in enumerate(t.edges):
            self.edge_id[u, v] = e
            self.edge_id[v, u] = e
        self.num_edges = t.num_edges


# Tilings compare by value, so the cache is keyed by identity, with a
# weakref purging the entry when the tiling is collected.
_table_cache: dict[int, tuple[_Tables, weakref.ref]] = {}


def _tables(t: SurfaceTiling) -> _Tables:
    key = id(t)
    hit = _table_cache.get(key)
    if hit is not None and hit[1]() is t:
        return hit[0]
    tab = _Tables(t)
    _table_cache[key] = (tab, weakref.ref(t, lambda _r, k=key: _table_cache.pop(k, None)))
    return tab


class ShortestPaths:
    """Path-reconstruction companion of a defect distance matrix."""

    def __init__(self, tables: _Tables):
        self._t = tables

    def distance(self, u: int, v: int) -> int:
        return int(self._t.dist[u, v])

    def path_edges(self, u: int, v: int) -> tuple[int, ...]:
        """Edge indices of the canonical shortest path between vertices."""
        a, b = (u, v) if u < v else (v, u)
        out = []
        cur = b
        while cur != a:
            p = int(self._t.pred[a, cur])
            out.append(int(self._t.edge_id[cur, p]))
            cur = p
        return tuple(reversed(out))


def all_pairs_defect_distances(t: SurfaceTiling, defects) -> tuple[np.ndarray, ShortestPaths]:
    """Exact pairwise hop distances between defect vertices, plus a path
    oracle.  Raises ValueError on a disconnected tiling."""
    d = np.asarray(list(defects), dtype=np.int64)
    if d.size and (d.min() < 0 or d.max() >= t.num_vertices):
        raise ValueError("defect index out of range")
    tab = _tables(t)
    return tab.dist[np.ix_(d, d)].astype(np.int64), ShortestPaths(tab)


@dataclass(frozen=True)
class Pairing:
    """A perfect pairing of defect indices with its total distance."""

    pairs: tuple[tuple[int, int], ...]
    total_weight: int


def _solve(weights: np.ndarray) -> np.ndarray:
    return min_weight_perfect_matching_array(weights)


def _pairing_weight(weights: np.ndarray, mate: np.ndarray) -> int:
    return int(sum(int(weights[i, mate[i]]) for i in range(len(mate)))) // 2


def min_weight_perfect_matching(weights, canonical: bool = True) -> Pairing:
    """Exact minimum-weight perfect matching of a symmetric non-negative
    integer matrix.

    With canonical=True (the default) the result is, among all optimal
    pairings, the one whose sorted pair list is lexicographically smallest;
    this costs additional solver calls and matters only for tie-breaking.
    """
    w = np.asarray(weights)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError("weight matrix must be square")
    n = w.shape[0]
    if n % 2:
        raise ValueError("perfect matching needs an even number of vertices")
    if not np.issubdtype(w.dtype, np.integer):
        raise ValueError("weights must be integers")
    if n and (w < 0).any():
        raise ValueError("weights must be non-negative")
    if not np.array_equal(w, w.T):
        raise ValueError("weight matrix must be symmetric")
    w = w.astype(np.int64)
    if n == 0:
        return Pairing((), 0)
    mate = _solve(w)
    total = _pairing_weight(w, mate)
    if not canonical:
        pairs = tuple(sorted((i, int(mate[i])) for i in range(n) if i < mate[i]))
        return Pairing(pairs, total)

    # Lexicographic refinement: fix the smallest free vertex to its
    # smallest partner that still permits an optimal completion.
    remaining = list(range(n))
    rem_mate = {i: int(mate[i]) for i in remaining}
    pairs = []
    target = total
    while remaining:
        i = remaining[0]
        chosen = None
        for j in remaining[1:]:
            if j == rem_mate[i]:
                # Always completable at the current target.
                chosen = j
                sub = [x for x in remaining if x not in (i, j)]
                sub_mate = {a: rem_mate[a] for a in sub}
                break
            sub = [x for x in remaining if x not in (i, j)]
            if sub:
                smat = _solve(w[np.ix_(sub, sub)])
                sub_total = _pairing_weight(w[np.ix_(sub, sub)], smat)
            else:
                sub_total = 0
            if int(w[i, j]) + sub_total == target:
                chosen = j
                sub_mate = {sub[a]: sub[int(smat[a])] for a in range(len(sub))}
                break
        pairs.append((i, chosen))
        target -= int(w[i, chosen])
        remaining = [x for x in remaining if x not in (i, chosen)]
        rem_mate = sub_mate
    return Pairing(tuple(pairs), total)


def _decode_surface_arrays(t: SurfaceTiling, defects: np.ndarray) -> tuple[np.ndarray, int]:
    """Fast path: defect vertex indices -> (correction edge indices,
    matching weight).  Used per trial by the simulator."""
    tab = _tables(t)
    nd = defects.shape[0]
    if nd == 0:
        return np.empty(0, dtype=np.int64), 0
    wsub = tab.dist[np.ix_(defects, defects)].astype(np.int64)
    mate = _solve(wsub)
    weight = _pairing_weight(wsub, mate)
    acc = np.zeros(tab.num_edges, dtype=np.uint8)
    _xor_paths(defects.astype(np.int64), mate, tab.pred, tab.edge_id, acc)
    return np.nonzero(acc & 1)[0].astype(np.int64), weight


def decode_surface(t: SurfaceTiling, s: BinaryChain) -> BinaryChain:
    """Estimate an edge chain whose boundary is the syndrome s: match the
    defects at minimum total distance and XOR the canonical paths."""
    if s.dimension != t.num_vertices:
        raise ValueError(
            f"syndrome dimension {s.dimension} does not match "
            f"{t.num_vertices} vertices"
        )
    if s.weight % 2:
        raise ValueError("syndrome has odd weight: not a valid boundary")
    defects = np.asarray(s.support, dtype=np.int64)
    edges, _ = _decode_surface_arrays(t, defects)
    return BinaryChain(t.num_edges, tuple(int(e) for e in edges))


def brute_force_min_chain(t: SurfaceTiling, s: BinaryChain) -> BinaryChain:
    """Minimum-weight edge chain with boundary s, by exhaustive enumeration
    over all 2^E edge subsets.  Test oracle; requires |E| <= 20.  Ties break
    toward the smallest edge-set bitmask."""
    if t.num_edges > 20:
        raise ValueError("brute force limited to 20 edges")
    if s.dimension != t.num_vertices:
        raise ValueError("syndrome dimension mismatch")
    target = s.mask
    ne = t.num_edges
    endpoint_mask = [0] * ne
    for e, (u, v) in enumerate(t.edges):
        endpoint_mask[e] = (1 << u) | (1 << v)
    boundary = np.zeros(1 << ne, dtype=np.int64)
    for e in range(ne):
        half = 1 << e
        boundary[half:2 * half] = boundary[:half] ^ endpoint_mask[e]
    candidates = np.nonzero(boundary == target)[0]
    if candidates.size == 0:
        raise ValueError("syndrome is not a boundary of any edge set")
    weights = np.bitwise_count(candidates.astype(np.uint64))
    # argmin returns the first minimum; candidates ascend, so ties break
    # toward the smallest bitmask
    best_bits = int(candidates[np.argmin(weights)])
    support = tuple(e for e in range(ne) if (best_bits >> e) & 1)
    return BinaryChain(ne, support)
