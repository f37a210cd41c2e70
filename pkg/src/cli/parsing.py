"""Parsers for command-line values: points, slopes, lists and ranges."""

import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from src.curves.slopes import Slope, parse_slope
from src.errors import DomainError
from src.teich.space import FrickePoint, TeichSlice, leaf_point, validate


def warn(message: str):
    print(f"⚠️  {message}", file=sys.stderr)


def float_list(text: str, name: str = "value") -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"Malformed {name} list {text!r}, expected comma-separated numbers")


def rational_list(text: str, name: str = "value") -> List[Fraction]:
    """Comma-separated exact rationals such as "2,3/2,1"."""
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"Malformed {name} list {text!r}, expected comma-separated rationals")


def value_range(text: str, name: str = "range") -> Tuple[float, float]:
    values = float_list(text, name)
    if len(values) != 2 or not values[0] < values[1]:
        raise DomainError(f"{name} must be 'lo,hi' with lo < hi, got {text!r}")
    return values[0], values[1]


def slope_arg(text: str) -> Slope:
    """Parse p/q; a common factor is removed with a warning."""
    slope, reduced = parse_slope(text)
    if reduced:
        warn(f"Slope {text} is not primitive; using {slope}")
    return slope


def optional_slope(text: Optional[str]) -> Optional[Slope]:
    return None if text is None else slope_arg(text)


def point_arg(
    text: Optional[str] = None,
    boundary: Optional[float] = None,
    leaf: Optional[float] = None,
    theta: Optional[float] = None,
    tol: float = 1e-10,
) -> FrickePoint:
    """
    A marked torus from "x,y,z", or from boundary length, leaf trace and theta.

    Raises:
        DomainError: malformed input or an invalid point
    """
    if text is not None:
        values = float_list(text, "point")
        if len(values) != 3:
            raise DomainError(f"Point must be three traces 'x,y,z', got {text!r}")
        point = FrickePoint(*values)
    elif leaf is not None:
        point = leaf_point(TeichSlice(boundary or 0.0), leaf, theta or 0.0)
    else:
        raise DomainError("Give a point as --point x,y,z or as --leaf x [--boundary eps --theta t]")
    ok, reason = validate(point, tol)
    if not ok:
        raise DomainError(f"Invalid point {point}: {reason}")
    return point


def positive(name: str, value: float) -> float:
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value
