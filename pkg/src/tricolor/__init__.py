"""Hexagonal color codes, their three projected surface codes, and a
matching-plus-lifting decoder, all over GF(2)."""

from tricolor.gf2 import BinaryChain, BinaryMatrix
from tricolor.complexes import TwoComplex, CssCode, css_from_complex
from tricolor.tiling import SurfaceTiling, cayley_triangular, dual_tiling, color_subtiling
from tricolor.colorcode import ColorCode, build_color_code, color_syndrome
from tricolor.decode import DecodeOutcome, DecodeStatus, decode_color, judge

__all__ = [
    "BinaryChain",
    "BinaryMatrix",
    "TwoComplex",
    "CssCode",
    "css_from_complex",
    "SurfaceTiling",
    "cayley_triangular",
    "dual_tiling",
    "color_subtiling",
    "ColorCode",
    "build_color_code",
    "color_syndrome",
    "DecodeOutcome",
    "DecodeStatus",
    "decode_color",
    "judge",
]
