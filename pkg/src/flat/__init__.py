from src.flat.flat_torus import (
    TauPoint,
    BoundaryPoint,
    PoincareGeodesic,
    flat_length,
    equal_locus_flat,
    endpoint_residual,
)
from src.flat.squares import (
    HighMultiplicity,
    coprime_reps,
    coprime_rep_count,
    primes_one_mod_four,
    gaussian_products,
    construct_high_multiplicity,
)

__all__ = [
    "TauPoint",
    "BoundaryPoint",
    "PoincareGeodesic",
    "flat_length",
    "equal_locus_flat",
    "endpoint_residual",
    "HighMultiplicity",
    "coprime_reps",
    "coprime_rep_count",
    "primes_one_mod_four",
    "gaussian_products",
    "construct_high_multiplicity",
]
