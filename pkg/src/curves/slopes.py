"""
Simple closed curves on the one-holed torus as primitive homology classes.

An unoriented curve is a primitive pair (p, q) up to sign. The representative
kept is the one with q > 0, or (1, 0).
"""

from dataclasses import dataclass
from math import gcd
from typing import FrozenSet, List, Tuple

from src.errors import DomainError

Vector = Tuple[int, int]


def det(v: Vector, w: Vector) -> int:
    """Algebraic intersection of two oriented classes."""
    return v[0] * w[1] - v[1] * w[0]


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise DomainError("Slope (0,0) is not a curve")
        if gcd(p, q) != 1:
            raise DomainError(f"Slope ({p},{q}) is not primitive (gcd {gcd(p, q)})")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def reduced(cls, p: int, q: int) -> "Slope":
        """Slope of the primitive part of (p, q)."""
        g = gcd(p, q)
        if g == 0:
            raise DomainError("Slope (0,0) is not a curve")
        return cls(p // g, q // g)

    @property
    def vector(self) -> Vector:
        return (self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def parse_slope(text: str) -> Tuple[Slope, bool]:
    """
    Parse "p/q" (or "p,q").

    Returns:
        Tuple (slope, reduced) where reduced is True when a common factor was removed
    """
    for sep in ("/", ","):
        if sep in text:
            left, right = text.split(sep, 1)
            break
    else:
        raise DomainError(f"Malformed slope {text!r}, expected p/q")
    try:
        p, q = int(left.strip()), int(right.strip())
    except ValueError:
        raise DomainError(f"Malformed slope {text!r}, expected integers p/q")
    g = gcd(p, q)
    if g == 0:
        raise DomainError("Slope 0/0 is not a curve")
    return Slope(p // g, q // g), g != 1


def intersection_number(s1: Slope, s2: Slope) -> int:
    return abs(det(s1.vector, s2.vector))


def complement(s: Slope) -> Slope:
    """A slope c with |det(s, c)| = 1, so (s, c) is a basis of homology."""
    p, q = s.vector
    if q == 0:
        return Slope(0, 1)
    d = pow(p, -1, q)
    c = (p * d - 1) // q
    return Slope(c, d)


def dehn_twist(s: Slope, along: Slope, k: int) -> Slope:
    """
    Image of s under the k-th power of the twist about `along`.

    In a basis where `along` is (1,0) the twist is (x, y) -> (x + k*y, y);
    conjugated back this is v -> v + k*det(along, v)*along.
    """
    v, g = s.vector, along.vector
    n = k * det(g, v)
    return Slope(v[0] + n * g[0], v[1] + n * g[1])


def _rotate(s: Slope) -> Slope:
    return Slope(-s.q, s.p - s.q)


def _swap(s: Slope) -> Slope:
    return Slope(s.q, s.p)


def isometry_orbit(s: Slope) -> FrozenSet[Slope]:
    """Orbit of s under the order-3 rotation and the swap of the symmetric torus."""
    orbit = {s}
    frontier = [s]
    while frontier:
        current = frontier.pop()
        for image in (_rotate(current), _swap(current)):
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return frozenset(orbit)


def orbit_representative(s: Slope) -> Slope:
    """Smallest member of the isometry orbit, used to key orbits."""
    return min(isometry_orbit(s), key=lambda m: (abs(m.p) + abs(m.q), m.q, m.p))


def farey_descent(p: int, q: int) -> List[str]:
    """
    Stern-Brocot moves from the pair ((1,0),(0,1)) down to the pair whose mediant is (p,q).

    "L" replaces the right neighbour by the mediant, "R" the left one.
    Requires p, q >= 1.
    """
    if p < 1 or q < 1:
        raise DomainError(f"Descent needs p, q >= 1, got ({p},{q})")
    u, v = (1, 0), (0, 1)
    moves = []
    while True:
        m = (u[0] + v[0], u[1] + v[1])
        if m == (p, q):
            return moves
        if det((p, q), m) > 0:
            moves.append("L")
            v = m
        else:
            moves.append("R")
            u = m


def slope_word(s: Slope) -> str:
    """
    Word in A, B (a, b for inverses) whose conjugacy class is the curve s.

    (1,0) is A, (0,1) is B and the mediant word is the concatenation of its
    parents' words. Slopes with p < 0 use the reflection B -> b.
    """
    p, q = s.vector
    if (p, q) == (1, 0):
        return "A"
    flip = p < 0
    p = abs(p)
    if p == 0:
        word = "B"
    else:
        left, right = "A", "B"
        for move in farey_descent(p, q):
            if move == "L":
                right = left + right
            else:
                left = left + right
        word = left + right
    return word.replace("B", "b") if flip else word


def primitive_slopes(bound: int) -> List[Slope]:
    """All unoriented primitive slopes with |p|, |q| <= bound."""
    slopes = [Slope(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(p, q) == 1:
                slopes.append(Slope(p, q))
    return slopes


def slopes_by_complexity(cap: int) -> List[Slope]:
    """All unoriented primitive slopes with |p| + |q| <= cap."""
    return [s for s in primitive_slopes(cap) if abs(s.p) + abs(s.q) <= cap]
