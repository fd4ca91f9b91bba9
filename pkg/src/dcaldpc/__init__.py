"""LDPC codes of length 4n^2 - 2n built from cyclic difference covering arrays."""

from .analysis import CodeReport, analyze, code_params, girth, min_distance
from .codec import Encoder, decode_bit_flip, decode_sum_product
from .dca import canonical_dca, verify_p1, verify_p2
from .pbibd import build_design, incidence_matrix, parity_check

__all__ = [
    "CodeReport",
    "Encoder",
    "analyze",
    "build_design",
    "canonical_dca",
    "code_params",
    "decode_bit_flip",
    "decode_sum_product",
    "girth",
    "incidence_matrix",
    "min_distance",
    "parity_check",
    "verify_p1",
    "verify_p2",
]
