from src.locus.equal_length import (
    LocusPoint,
    LocusPolyline,
    LengthCoincidence,
    companion_curves,
    locus_leaf_solution,
    locus_point_on_leaf,
    leaf_sign_changes,
    trace_locus,
    find_length_coincidences,
)

__all__ = [
    "LocusPoint",
    "LocusPolyline",
    "LengthCoincidence",
    "companion_curves",
    "locus_leaf_solution",
    "locus_point_on_leaf",
    "leaf_sign_changes",
    "trace_locus",
    "find_length_coincidences",
]
