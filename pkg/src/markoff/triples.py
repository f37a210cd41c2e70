"""
Markoff triples: positive integer solutions of x^2 + y^2 + z^2 = 3xyz (classical)
or x^2 + y^2 + z^2 = xyz (trace form, every entry three times larger).

Every classical triple is reached from (1, 1, 1) by the Vieta moves
(x, y, z) -> (3yz - x, y, z) and their permutations. Away from the root a move
either returns toward the root or strictly raises the maximum, so popping
triples from a heap keyed by the maximum yields them in sorted order.
"""

import heapq
from collections import defaultdict
from dataclasses import dataclass
from math import isqrt
from typing import Dict, Iterable, List, Tuple

from src.errors import DomainError
from src.teich.space import FrickePoint

NORMALIZATIONS = {"classical": 3, "trace": 1}


def _scale(normalization: str) -> int:
    if normalization not in NORMALIZATIONS:
        raise DomainError(f"Unknown normalization {normalization!r}, expected one of {sorted(NORMALIZATIONS)}")
    return 3 if normalization == "trace" else 1


@dataclass(frozen=True, order=True)
class MarkoffTriple:
    x: int
    y: int
    z: int
    normalization: str = "classical"

    def __post_init__(self):
        _scale(self.normalization)
        x, y, z = sorted((int(self.x), int(self.y), int(self.z)), reverse=True)
        if z < 1:
            raise DomainError(f"Markoff triple entries must be positive, got ({x},{y},{z})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        if self.residual != 0:
            raise DomainError(f"({x},{y},{z}) is not a {self.normalization} Markoff triple")

    @property
    def residual(self) -> int:
        k = NORMALIZATIONS[self.normalization]
        return self.x ** 2 + self.y ** 2 + self.z ** 2 - k * self.x * self.y * self.z

    @property
    def entries(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def to_normalization(self, normalization: str) -> "MarkoffTriple":
        ratio = _scale(normalization) / _scale(self.normalization)
        if ratio >= 1:
            factor = int(ratio)
            return MarkoffTriple(self.x * factor, self.y * factor, self.z * factor, normalization)
        return MarkoffTriple(self.x // 3, self.y // 3, self.z // 3, normalization)


def _vieta_neighbours(triple: Tuple[int, int, int]) -> List[Tuple[int, int, int]]:
    x, y, z = triple
    moved = [(3 * y * z - x, y, z), (x, 3 * x * z - y, z), (x, y, 3 * x * y - z)]
    return [tuple(sorted(t, reverse=True)) for t in moved]


def enumerate_triples(bound: int, normalization: str = "classical") -> List[MarkoffTriple]:
    """
    All Markoff triples with maximum <= bound, each once, sorted by maximum.

    Args:
        bound: Largest allowed entry (in the chosen normalization)
        normalization: "classical" (3xyz) or "trace" (xyz)
    """
    scale = _scale(normalization)
    if bound < scale:
        raise DomainError(f"Bound {bound} is below the smallest {normalization} Markoff number {scale}")
    limit = bound // scale

    root = (1, 1, 1)
    seen = {root}
    heap = [root]
    found = []
    while heap:
        current = heapq.heappop(heap)
        found.append(current)
        for child in _vieta_neighbours(current):
            if child[0] <= limit and child not in seen:
                seen.add(child)
                heapq.heappush(heap, child)

    return [MarkoffTriple(x * scale, y * scale, z * scale, normalization) for x, y, z in found]


def brute_force_triples(bound: int, normalization: str = "classical") -> List[MarkoffTriple]:
    """
    Markoff triples with maximum <= bound by direct search.

    For each x >= y the cubic is a quadratic in z, solved exactly with isqrt.
    """
    _scale(normalization)
    k = NORMALIZATIONS[normalization]
    found = []
    for x in range(1, bound + 1):
        for y in range(1, x + 1):
            b = k * x * y
            disc = b * b - 4 * (x * x + y * y)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            for numerator in {b - root, b + root}:
                if numerator % 2 == 0 and 1 <= numerator // 2 <= y:
                    found.append(MarkoffTriple(x, y, numerator // 2, normalization))
    return sorted(set(found))


def find_collisions(triples: Iterable[MarkoffTriple]) -> List[Tuple[MarkoffTriple, MarkoffTriple]]:
    """Pairs of distinct triples that share their maximum."""
    by_max: Dict[int, List[MarkoffTriple]] = defaultdict(list)
    for triple in triples:
        by_max[triple.x].append(triple)

    collisions = []
    for maximum in sorted(by_max):
        group = sorted(set(by_max[maximum]))
        collisions.extend((group[i], group[j]) for i in range(len(group)) for j in range(i + 1, len(group)))
    return collisions


def verify_uniqueness(bound: int, normalization: str = "classical") -> List[Tuple[MarkoffTriple, MarkoffTriple]]:
    """Collisions of maxima among all triples up to bound; empty when uniqueness holds there."""
    return find_collisions(enumerate_triples(bound, normalization))


def markoff_numbers(bound: int, normalization: str = "classical") -> List[int]:
    return sorted({t.x for t in enumerate_triples(bound, normalization)})


def triple_to_traces(triple: MarkoffTriple) -> FrickePoint:
    """The cusped torus with traces given by the trace-form triple."""
    x, y, z = triple.to_normalization("trace").entries
    return FrickePoint(x, y, z)
