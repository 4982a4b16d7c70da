"""Exact numerical ranges of matrices over degree-2 Galois extensions L/K."""
from .fields import GF, QQ, QuadraticExtension, parse_field_spec
from .linalg import ExtMatrix
from .normsets import in_delta, in_delta_n, zero_in_hat_delta2
from .circles import Circle, circle_points
from .numrange import (
    classify_2x2,
    classify_corank1,
    direct_sum_range,
    num_range_exhaustive,
    num_range_sample,
    singleton_witness,
)
from .krange import KMatrix, char2_reduce, is_singleton_K, k_range_exhaustive

__all__ = [
    "GF", "QQ", "QuadraticExtension", "parse_field_spec", "ExtMatrix",
    "in_delta", "in_delta_n", "zero_in_hat_delta2", "Circle", "circle_points",
    "classify_2x2", "classify_corank1", "direct_sum_range", "num_range_exhaustive",
    "num_range_sample", "singleton_witness", "KMatrix", "char2_reduce",
    "is_singleton_K", "k_range_exhaustive",
]
