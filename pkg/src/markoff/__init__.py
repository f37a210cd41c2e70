from src.markoff.triples import (
    NORMALIZATIONS,
    MarkoffTriple,
    enumerate_triples,
    brute_force_triples,
    find_collisions,
    verify_uniqueness,
    markoff_numbers,
    triple_to_traces,
)

__all__ = [
    "NORMALIZATIONS",
    "MarkoffTriple",
    "enumerate_triples",
    "brute_force_triples",
    "find_collisions",
    "verify_uniqueness",
    "markoff_numbers",
    "triple_to_traces",
]
