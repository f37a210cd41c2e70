from src.fricke.core import (
    Mat2,
    trace_from_length,
    length_from_trace,
    commutator_trace,
    sl2_inverse,
    realize_generators,
    parse_word,
    word_matrix,
    word_trace,
)
from src.fricke.zeros import (
    CoshSumSpec,
    ZeroScan,
    count_positive_zeros,
    exponential_sum,
    log_sum_gap,
)

__all__ = [
    "Mat2",
    "trace_from_length",
    "length_from_trace",
    "commutator_trace",
    "sl2_inverse",
    "realize_generators",
    "parse_word",
    "word_matrix",
    "word_trace",
    "CoshSumSpec",
    "ZeroScan",
    "count_positive_zeros",
    "exponential_sum",
    "log_sum_gap",
]
