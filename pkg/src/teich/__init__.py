from src.teich.space import (
    FrickePoint,
    TeichSlice,
    validate,
    boundary_length,
    leaf_point,
    leaf_minimum,
    change_basis,
    symmetric_family,
    cusped_diagonal_point,
    length_vector,
    projective_gap,
)

__all__ = [
    "FrickePoint",
    "TeichSlice",
    "validate",
    "boundary_length",
    "leaf_point",
    "leaf_minimum",
    "change_basis",
    "symmetric_family",
    "cusped_diagonal_point",
    "length_vector",
    "projective_gap",
]
