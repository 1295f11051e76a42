"""2-complexes over GF(2) and the CSS codes they define.

A 2-complex is three chain spaces with boundary maps d2, d1 whose
composition vanishes.  Both maps are stored row-per-basis-element:
row f of d2 is the edge set of face f, row e of d1 is the endpoint set
of edge e.  Applying a map to a chain XORs the selected rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from tricolor.gf2 import BinaryChain, BinaryMatrix, DimensionMismatch


class InvalidComplex(ValueError):
    """The boundary maps do not compose to zero."""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    bad_faces: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class TwoComplex:
    """dim2 faces, dim1 edges, dim0 vertices, with d1 . d2 = 0."""

    __slots__ = ("dim2", "dim1", "dim0", "d2", "d1", "__weakref__")

    def __init__(self, d2: BinaryMatrix, d1: BinaryMatrix):
        if d2.cols != d1.rows:
            raise DimensionMismatch(
                f"d2 has {d2.cols} columns but d1 has {d1.rows} rows"
            )
        object.__setattr__(self, "dim2", d2.rows)
        object.__setattr__(self, "dim1", d2.cols)
        object.__setattr__(self, "dim0", d1.cols)
        object.__setattr__(self, "d2", d2)
        object.__setattr__(self, "d1", d1)

    def __setattr__(self, name, value):
        raise AttributeError("TwoComplex is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TwoComplex)
            and self.d2 == other.d2
            and self.d1 == other.d1
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"TwoComplex({self.dim2} -> {self.dim1} -> {self.dim0})"

    def boundary2(self, x: BinaryChain) -> BinaryChain:
        """Image of a face chain under d2."""
        return self.d2.apply_to(x)

    def boundary1(self, x: BinaryChain) -> BinaryChain:
        """Image of an edge chain under d1."""
        return self.d1.apply_to(x)


def validate(c: TwoComplex) -> ValidationReport:
    """Check d1 . d2 = 0 on every face basis vector; report offenders."""
    bad = []
    for f in range(c.dim2):
        edge_chain = c.d2.row(f)
        if c.d1.apply_to(edge_chain):
            bad.append(f)
    return ValidationReport(not bad, tuple(bad))


def dual(c: TwoComplex) -> TwoComplex:
    """The transposed complex: dim2' = dim0, d2' = d1^T, d1' = d2^T."""
    return TwoComplex(c.d1.transpose(), c.d2.transpose())


@dataclass(frozen=True)
class CssCode:
    """A CSS code presented by two row-orthogonal check matrices.

    Rows are checks, columns are qubits, for both hx and hz.  The number of
    encoded qubits k is always computed from the GF(2) ranks, never assumed.
    """

    n: int
    k: int
    hx: BinaryMatrix
    hz: BinaryMatrix

    def __post_init__(self):
        if self.hx.cols != self.n or self.hz.cols != self.n:
            raise DimensionMismatch("check matrices must have n columns")


def css_from_complex(c: TwoComplex) -> CssCode:
    """The CSS code of a valid 2-complex: qubits on edges, X-checks on
    vertices (columns of d1 as checks), Z-checks on faces (rows of d2)."""
    report = validate(c)
    if not report.ok:
        raise InvalidComplex(
            f"d1 . d2 != 0 on faces {report.bad_faces[:8]}"
        )
    hx = c.d1.transpose()
    hz = c.d2
    n = c.dim1
    k = n - hx.echelon().rank - hz.echelon().rank
    return CssCode(n=n, k=k, hx=hx, hz=hz)


def syndrome(c: TwoComplex, x: BinaryChain) -> BinaryChain:
    """The terminal vertices of an edge chain: its image under d1."""
    if x.dimension != c.dim1:
        raise DimensionMismatch(
            f"error has dimension {x.dimension}, complex has dim1 {c.dim1}"
        )
    return c.d1.apply_to(x)


def is_stabilizer(c: TwoComplex, x: BinaryChain) -> bool:
    """True iff x is a boundary, i.e. lies in the row space of d2."""
    if x.dimension != c.dim1:
        raise DimensionMismatch(
            f"chain has dimension {x.dimension}, complex has dim1 {c.dim1}"
        )
    return c.d2.echelon().in_row_space(x)
