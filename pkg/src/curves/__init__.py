from src.curves.slopes import (
    Slope,
    det,
    parse_slope,
    intersection_number,
    complement,
    dehn_twist,
    isometry_orbit,
    orbit_representative,
    farey_descent,
    slope_word,
    primitive_slopes,
    slopes_by_complexity,
)
from src.curves.traces import (
    TracePolynomial,
    trace_from_seeds,
    trace_of_slope,
    trace_polynomial,
)

__all__ = [
    "Slope",
    "det",
    "parse_slope",
    "intersection_number",
    "complement",
    "dehn_twist",
    "isometry_orbit",
    "orbit_representative",
    "farey_descent",
    "slope_word",
    "primitive_slopes",
    "slopes_by_complexity",
    "TracePolynomial",
    "trace_from_seeds",
    "trace_of_slope",
    "trace_polynomial",
]
