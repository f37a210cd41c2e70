from src.spectrum.enumeration import (
    SpectrumEntry,
    MultiplicityClass,
    enumerate_by_trace,
    enumerate_simple,
    group_entries,
    multiplicity_histogram,
    max_multiplicity,
    markoff_violations,
    check_markoff_property,
)
from src.spectrum.twists import (
    RatioStep,
    slope_length,
    twist_sequence,
    twist_bound_gap,
    ratio_estimates,
    ratio_estimate,
)
from src.spectrum.search import (
    OrderReversal,
    EqualTraceCrossing,
    PathCrossing,
    find_order_reversal,
    equal_trace_crossings,
    find_equal_trace_parameter,
    scan_equal_trace_crossings,
    equal_length_on_path,
)

__all__ = [
    "SpectrumEntry",
    "MultiplicityClass",
    "enumerate_by_trace",
    "enumerate_simple",
    "group_entries",
    "multiplicity_histogram",
    "max_multiplicity",
    "markoff_violations",
    "check_markoff_property",
    "RatioStep",
    "slope_length",
    "twist_sequence",
    "twist_bound_gap",
    "ratio_estimates",
    "ratio_estimate",
    "OrderReversal",
    "EqualTraceCrossing",
    "PathCrossing",
    "find_order_reversal",
    "equal_trace_crossings",
    "find_equal_trace_parameter",
    "scan_equal_trace_crossings",
    "equal_length_on_path",
]
