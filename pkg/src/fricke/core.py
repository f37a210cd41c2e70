"""
Trace/length conversions and explicit SL(2,R) realisations of trace triples.

A simple closed geodesic of length l is covered by a matrix of trace 2*cosh(l/2).
The matrix realisation below is the brute-force oracle every recursive trace
computation in the package is checked against.
"""

import re
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.errors import DomainError

Mat2 = np.ndarray
Word = Union[str, Sequence[Tuple[str, int]]]

_WORD_TOKEN = re.compile(r"([AaBb])(\^(-?\d+)|⁻¹)?")


def trace_from_length(length: float) -> float:
    """
    Convert a geodesic length to the trace of a covering matrix.

    Args:
        length: Hyperbolic length, must be positive

    Returns:
        2*cosh(length/2)
    """
    if not length > 0:
        raise DomainError(f"Length must be positive, got {length}")
    return 2.0 * np.cosh(length / 2.0)


def length_from_trace(trace: float) -> float:
    """
    Convert a trace back to a geodesic length.

    Args:
        trace: Trace of a hyperbolic element, must exceed 2

    Returns:
        2*arccosh(trace/2)
    """
    if not trace > 2:
        raise DomainError(f"Trace must exceed 2, got {trace}")
    # log1p form keeps precision for traces just above 2
    delta = trace / 2.0 - 1.0
    return 2.0 * np.log1p(delta + np.sqrt(delta * (delta + 2.0)))


def commutator_trace(x: float, y: float, z: float) -> float:
    """Trace of [A,B] in terms of tr A, tr B, tr AB."""
    # fixed evaluation order, so permuted arguments give bit-identical results
    x, y, z = sorted((x, y, z))
    return x * x + y * y + z * z - x * y * z - 2.0


def sl2_inverse(m: Mat2) -> Mat2:
    """Inverse of a determinant-one matrix, without division."""
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=float)


def realize_generators(x: float, y: float, z: float) -> Tuple[Mat2, Mat2]:
    """
    Build matrices A, B with tr A = x, tr B = y, tr AB = z.

    A is diagonal with eigenvalue lam, lam + 1/lam = x; B has b12 = 1 and its
    remaining entries are fixed by the two trace conditions and det B = 1.

    Args:
        x: Trace of A, must exceed 2
        y: Trace of B
        z: Trace of AB

    Returns:
        Tuple (A, B) of 2x2 float arrays
    """
    if not x > 2:
        raise DomainError(f"Unsupported normal form: diagonal generator needs x > 2, got {x}")

    lam = (x + np.sqrt(x * x - 4.0)) / 2.0
    a = np.array([[lam, 0.0], [0.0, 1.0 / lam]])

    b11 = (z - y / lam) / (lam - 1.0 / lam)
    b22 = y - b11
    b = np.array([[b11, 1.0], [b11 * b22 - 1.0, b22]])
    return a, b


def parse_word(word: Word) -> List[Tuple[str, int]]:
    """
    Normalise a word to a list of (generator, exponent) pairs.

    Strings use A, B for the generators and a, b for their inverses; an
    exponent may follow as ``^n`` or ``⁻¹`` (e.g. ``"AB^-1"``, ``"ABab"``).
    Sequences of (letter, exponent) tuples are accepted as-is.
    """
    letters: List[Tuple[str, int]] = []

    if isinstance(word, str):
        text = word.replace(" ", "")
        pos = 0
        while pos < len(text):
            match = _WORD_TOKEN.match(text, pos)
            if match is None:
                raise DomainError(f"Malformed word {word!r} at position {pos}")
            letter, suffix, power = match.groups()
            if suffix is None:
                exponent = 1
            elif suffix == "⁻¹":
                exponent = -1
            else:
                exponent = int(power)
            if letter.islower():
                letter, exponent = letter.upper(), -exponent
            letters.append((letter, exponent))
            pos = match.end()
    else:
        for letter, exponent in word:
            letter = str(letter).upper()
            if letter not in ("A", "B"):
                raise DomainError(f"Unknown generator {letter!r}")
            letters.append((letter, int(exponent)))

    if not letters:
        raise DomainError("Word must be nonempty")
    return letters


def word_matrix(a: Mat2, b: Mat2, word: Word) -> Mat2:
    """Matrix product spelled by a word in A, B."""
    generators = {"A": a, "B": b}
    inverses = {"A": sl2_inverse(a), "B": sl2_inverse(b)}

    product = np.eye(2)
    for letter, exponent in parse_word(word):
        base = generators[letter] if exponent >= 0 else inverses[letter]
        product = product @ np.linalg.matrix_power(base, abs(exponent))
    return product


def word_trace(a: Mat2, b: Mat2, word: Word) -> float:
    """Trace of the matrix product spelled by a word in A, B."""
    return float(np.trace(word_matrix(a, b, word)))
