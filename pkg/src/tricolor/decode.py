"""The color-code decoder: project the syndrome onto the three surface
codes, match each projection, recombine the three corrections into a cycle
of the parent tiling, and lift that cycle back to a hyperedge estimate.

A heralded NO LIFTING (the recombined cycle is not a cut boundary) is
reported as an outcome, not an exception; the simulator counts it as a
logical failure.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from tricolor import complexes
from tricolor._bits import PackedEchelon, pack_index_set
from tricolor.colorcode import ColorCode
from tricolor.gf2 import BinaryChain, DimensionMismatch
from tricolor.lift import lift_boundary, lift_boundary_arrays
from tricolor.matching import _decode_surface_arrays, decode_surface
from tricolor.projection import project_syndrome, recombine
from tricolor.tiling import COLORS, SurfaceTiling


class InvalidSyndrome(ValueError):
    """The input is not in the image of the boundary map."""


class DecodeStatus(Enum):
    CORRECTED = "corrected"
    LOGICAL_FAILURE = "logical-failure"
    HERALDED_NO_LIFTING = "no-lifting"


@dataclass(frozen=True)
class DecodeOutcome:
    status: DecodeStatus
    estimate: BinaryChain | None
    per_color_weights: tuple[int, int, int]
    combined_boundary_weight: int

    @property
    def heralded(self) -> bool:
        return self.status is DecodeStatus.HERALDED_NO_LIFTING


class ColorDecoder:
    """Per-code precomputed arrays for the trial-rate decode path."""

    def __init__(self, code: ColorCode):
        self.code = code
        g = code.g
        self.num_qubits = code.n
        self.g_edge_u = np.ascontiguousarray(
            np.asarray(g.edges, dtype=np.int64)[:, 0])
        self.g_edge_v = np.ascontiguousarray(
            np.asarray(g.edges, dtype=np.int64)[:, 1])
        self.num_g_edges = g.num_edges
        self.vertex_maps = [code.projections[c].vertex_map for c in COLORS]
        self.parent_edges = [code.projections[c].parent_edge for c in COLORS]
        self.subtilings = [code.projections[c].subtiling for c in COLORS]
        self.stabilizer_echelon = PackedEchelon(code.complex.d2.echelon())
        # three-vertex endpoint table of the hyperedges, for syndromes
        self.hyperedge_vertices = np.asarray(code.hypergraph.hyperedges,
                                             dtype=np.int64)

    def syndrome_indices(self, x_idx: np.ndarray) -> np.ndarray:
        counts = np.bincount(self.hyperedge_vertices[x_idx].ravel(),
                             minlength=self.code.hypergraph.num_vertices)
        return np.nonzero(counts & 1)[0]

    def decode_indices(self, s_idx: np.ndarray):
        """Syndrome vertex indices -> (heralded, estimate indices, per-color
        matching weights, recombined boundary weight)."""
        in_b = np.zeros(self.num_g_edges, dtype=np.uint8)
        weights = []
        bweight = 0
        for c in COLORS:
            sub_defs = self.vertex_maps[c][s_idx]
            sub_defs = sub_defs[sub_defs >= 0]
            if sub_defs.shape[0] % 2:
                raise InvalidSyndrome(
                    "projected defect count is odd: syndrome is not in the "
                    "image of the boundary map"
                )
            edges_c, w_c = _decode_surface_arrays(self.subtilings[c], sub_defs)
            weights.append(w_c)
            bweight += edges_c.shape[0]
            in_b[self.parent_edges[c][edges_c]] = 1
        x_idx = lift_boundary_arrays(self.code.g, self.g_edge_u,
                                     self.g_edge_v, in_b)
        return x_idx is None, x_idx, tuple(weights), bweight

    def is_stabilizer_indices(self, idx: np.ndarray) -> bool:
        return self.stabilizer_echelon.contains(
            pack_index_set(idx, self.num_qubits))


_decoder_cache: "weakref.WeakKeyDictionary[ColorCode, ColorDecoder]" = (
    weakref.WeakKeyDictionary())


def get_decoder(code: ColorCode) -> ColorDecoder:
    dec = _decoder_cache.get(code)
    if dec is None:
        dec = ColorDecoder(code)
        _decoder_cache[code] = dec
    return dec


SurfaceDecoderFn = Callable[[SurfaceTiling, BinaryChain], BinaryChain]


def decode_color(code: ColorCode, s: BinaryChain,
                 surface_decoder: SurfaceDecoderFn | None = None) -> DecodeOutcome:
    """Run the full projection decoder on a syndrome.

    surface_decoder replaces the matching step (it receives a subtiling and
    a projected syndrome chain and must return an edge chain with that
    boundary); with a replacement the per-color weights are the returned
    chain weights.
    """
    if s.dimension != code.hypergraph.num_vertices:
        raise DimensionMismatch(
            f"syndrome dimension {s.dimension} does not match "
            f"{code.hypergraph.num_vertices} vertices"
        )
    if surface_decoder is None:
        dec = get_decoder(code)
        s_idx = np.asarray(s.support, dtype=np.int64)
        heralded, x_idx, weights, bweight = dec.decode_indices(s_idx)
        if heralded:
            return DecodeOutcome(DecodeStatus.HERALDED_NO_LIFTING, None,
                                 weights, bweight)
        estimate = BinaryChain(code.n, tuple(int(i) for i in x_idx))
        return DecodeOutcome(DecodeStatus.CORRECTED, estimate, weights, bweight)

    chains = []
    weights = []
    for c in COLORS:
        table = code.projections[c]
        s_c = project_syndrome(table, s)
        if s_c.weight % 2:
            raise InvalidSyndrome(
                "projected defect count is odd: syndrome is not in the "
                "image of the boundary map"
            )
        b_c = surface_decoder(table.subtiling, s_c)
        chains.append(b_c)
        weights.append(b_c.weight)
    b = recombine(code.projections, *chains)
    x = lift_boundary(code.g, b)
    if x is None:
        return DecodeOutcome(DecodeStatus.HERALDED_NO_LIFTING, None,
                             tuple(weights), b.weight)
    estimate = BinaryChain(code.n, x.support)
    return DecodeOutcome(DecodeStatus.CORRECTED, estimate,
                         tuple(weights), b.weight)


def matching_surface_decoder(t: SurfaceTiling, s: BinaryChain) -> BinaryChain:
    """The default surface decoder, exposed for injection-style tests."""
    return decode_surface(t, s)


def judge(code: ColorCode, x: BinaryChain, outcome: DecodeOutcome) -> bool:
    """Success iff the decoder produced an estimate equivalent to the true
    error modulo stabilizers.  Heralded outcomes count as failures."""
    if x.dimension != code.n:
        raise DimensionMismatch(
            f"error dimension {x.dimension} does not match n={code.n}"
        )
    if outcome.heralded or outcome.estimate is None:
        return False
    return complexes.is_stabilizer(code.complex, x + outcome.estimate)
