"""Subcommands. Each one parses its flags, calls the library and returns a CommandResult."""

import argparse
import sys
from dataclasses import asdict

import numpy as np
import yaml

from src.cli.parsing import (
    float_list,
    optional_slope,
    point_arg,
    positive,
    rational_list,
    slope_arg,
    value_range,
)
from src.cli.registry import BaseCommand, CommandResult, register_command
from src.curves.slopes import complement, slopes_by_complexity
from src.errors import DomainError
from src.fhs.counterexample import counterexample_report, exact_invariants
from src.fhs.resultants import resultant_check
from src.fhs.solvers import CASES, solve_boundary_general, solve_boundary_symmetric
from src.fhs.traces import FhsTraces, Invariant4, boundary_invariants, check_consistency, surface_from
from src.flat.flat_torus import TauPoint, equal_locus_flat, flat_length
from src.flat.squares import construct_high_multiplicity, coprime_reps
from src.fricke.core import length_from_trace, trace_from_length
from src.fricke.zeros import FAMILIES, CoshSumSpec, count_positive_zeros
from src.locus.equal_length import find_length_coincidences, trace_locus
from src.markoff.triples import NORMALIZATIONS, enumerate_triples, find_collisions, markoff_numbers
from src.spectrum.enumeration import enumerate_by_trace, group_entries, markoff_violations, max_multiplicity
from src.spectrum.search import equal_length_on_path, find_order_reversal, scan_equal_trace_crossings
from src.spectrum.twists import ratio_estimates, slope_length, twist_bound_gap, twist_sequence
from src.teich.space import FrickePoint, TeichSlice, validate


def progress(message: str):
    print(message, file=sys.stderr)


def _add_point_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--point", type=str, help="Trace triple x,y,z")
    parser.add_argument("--boundary", type=float, default=None, help="Boundary length (with --leaf)")
    parser.add_argument("--leaf", type=float, default=None, help="Trace of (1,0) on the leaf")
    parser.add_argument("--theta", type=float, default=None, help="Leaf coordinate")


def _slope_names(slopes) -> str:
    return " ".join(str(s) for s in slopes)


@register_command("spectrum")
class SpectrumCommand(BaseCommand):
    help = "Simple length spectrum with multiplicities"

    @classmethod
    def add_arguments(cls, parser):
        _add_point_arguments(parser)
        bound = parser.add_mutually_exclusive_group()
        bound.add_argument("--max-trace", type=float, default=None, help="Trace bound")
        bound.add_argument("--max-length", type=float, default=None, help="Length bound")
        parser.add_argument("--tol", type=float, default=None, help="Equal-length tolerance")
        parser.add_argument("--depth-cap", type=int, default=None, help="Maximum Farey depth")
        parser.add_argument("--check-markoff", action="store_true", help="Report equal-length pairs in different orbits")

    def execute(self, args):
        point = point_arg(args.point, args.boundary, args.leaf, args.theta)
        tol = positive("tol", self.pick(args.tol, "tolerances", "equal_length", 1e-9))
        depth_cap = self.pick(args.depth_cap, "spectrum", "depth_cap", 64)
        if args.max_length is not None:
            max_trace = trace_from_length(positive("max-length", args.max_length))
        else:
            max_trace = positive("max-trace", self.pick(args.max_trace, "spectrum", "max_trace", 300.0))

        progress(f"🔍 Enumerating simple geodesics on {point} up to trace {max_trace:.15g}...")
        entries = enumerate_by_trace(point, max_trace, depth_cap=depth_cap, jobs=self.jobs)
        classes = group_entries(entries, tol)
        progress(f"✅ {len(entries)} curves in {len(classes)} length classes")

        summary = {
            "curves": len(entries),
            "classes": len(classes),
            "max_multiplicity": max_multiplicity(classes),
            "histogram": {f"{c.trace:.15g}": c.multiplicity for c in classes},
        }
        if args.check_markoff:
            violations = markoff_violations(entries, tol)
            summary["markoff_violations"] = len(violations)

        records = [
            {
                "length": c.length,
                "trace": c.trace,
                "multiplicity": c.multiplicity,
                "slopes": _slope_names(c.members),
            }
            for c in classes
        ]
        parameters = {"point": list(point.as_tuple()), "max_trace": max_trace, "tol": tol, "depth_cap": depth_cap}
        return CommandResult("spectrum", parameters, summary, records, ["length", "trace", "multiplicity", "slopes"])


@register_command("locus")
class LocusCommand(BaseCommand):
    help = "Equal-length locus E(alpha, beta) in a boundary slice"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--alpha", type=str, required=True, help="Slope p/q")
        parser.add_argument("--beta", type=str, required=True, help="Slope p/q")
        parser.add_argument("--boundary", type=float, default=0.0, help="Boundary length (0 = cusped)")
        parser.add_argument("--grid", type=str, default=None, help="Geometric grid 'start,stop,points' of tr(gamma)")
        parser.add_argument("--leaves", type=str, default=None, help="Explicit tr(gamma) values 'x1,x2,...'")
        parser.add_argument("--tol", type=float, default=None, help="Residual bound on |l(alpha) - l(beta)|")
        parser.add_argument("--coincidences", type=int, default=None, help="Search curves with |p|+|q| <= N for triple coincidences")

    def _grid(self, args):
        if args.leaves is not None:
            return float_list(args.leaves, "leaves")
        if args.grid is not None:
            values = float_list(args.grid, "grid")
            if len(values) != 3:
                raise DomainError(f"Grid must be 'start,stop,points', got {args.grid!r}")
            start, stop, points = values
        else:
            start = self.setting("locus", "grid_start", 2.05)
            stop = self.setting("locus", "grid_stop", 50.0)
            points = self.setting("locus", "grid_points", 20)
        if not start > 2 or not stop > 2:
            raise DomainError(f"Grid values must exceed 2, got {start}..{stop}")
        return list(np.geomspace(start, stop, int(points)))

    def execute(self, args):
        alpha, beta = slope_arg(args.alpha), slope_arg(args.beta)
        tol = positive("tol", self.pick(args.tol, "tolerances", "locus", 1e-9))
        theta_cap = self.setting("locus", "theta_cap", 32.0)
        grid = self._grid(args)

        progress(f"🔍 Tracing E({alpha}, {beta}) over {len(grid)} leaves...")
        polyline = trace_locus(TeichSlice(args.boundary), alpha, beta, grid, tol, theta_cap, jobs=self.jobs)
        progress(f"✅ {len(polyline.points)} locus points")

        summary = {
            "gamma": str(polyline.gamma),
            "gamma_prime": str(polyline.gamma_prime),
            "points": len(polyline.points),
            "max_residual": max(p.residual for p in polyline.points),
            "ratio_shrinks_toward_boundary": polyline.ratio_shrinks_toward_boundary,
        }
        if args.coincidences is not None:
            hits = find_length_coincidences(polyline, slopes_by_complexity(args.coincidences))
            summary["coincidences"] = [
                {"slope": str(h.slope), "index": h.index, "x_left": h.x_left, "x_right": h.x_right} for h in hits
            ]

        records = [
            {
                "x_of_gamma": p.x_of_gamma,
                "theta": p.theta,
                "x": p.point.x,
                "y": p.point.y,
                "z": p.point.z,
                "residual": p.residual,
                "companion_ratio": p.companion_ratio,
            }
            for p in polyline.points
        ]
        parameters = {"alpha": str(alpha), "beta": str(beta), "boundary": args.boundary, "tol": tol, "grid": grid}
        return CommandResult("locus", parameters, summary, records)


class _MarkoffCommand(BaseCommand):
    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--max", type=int, required=True, help="Largest entry")
        parser.add_argument(
            "--normalization",
            choices=sorted(NORMALIZATIONS),
            default="classical",
            help="classical: x^2+y^2+z^2 = 3xyz; trace: = xyz",
        )


@register_command("markoff verify")
class MarkoffVerifyCommand(_MarkoffCommand):
    help = "Check that Markoff triples are determined by their maximum"

    def execute(self, args):
        progress(f"🔍 Enumerating Markoff triples up to {args.max}...")
        triples = enumerate_triples(args.max, args.normalization)
        collisions = find_collisions(triples)
        progress(f"✅ collisions: {len(collisions)}")
        records = [{"first": str(a.entries), "second": str(b.entries), "maximum": a.x} for a, b in collisions]
        summary = {
            "triples": len(triples),
            "markoff_numbers": len({t.x for t in triples}),
            "collisions": len(collisions),
        }
        parameters = {"max": args.max, "normalization": args.normalization}
        return CommandResult("markoff verify", parameters, summary, records, ["first", "second", "maximum"])


@register_command("markoff list")
class MarkoffListCommand(_MarkoffCommand):
    help = "List Markoff triples sorted by maximum"

    def execute(self, args):
        triples = enumerate_triples(args.max, args.normalization)
        records = [{"x": t.x, "y": t.y, "z": t.z} for t in triples]
        summary = {"triples": len(triples), "numbers": markoff_numbers(args.max, args.normalization)}
        parameters = {"max": args.max, "normalization": args.normalization}
        return CommandResult("markoff list", parameters, summary, records, ["x", "y", "z"])


@register_command("violations search")
class ViolationsSearchCommand(BaseCommand):
    help = "Parameters t where (t,t,t) has equal-length curves in different orbits"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--t-range", type=str, default=None, help="Search interval 'lo,hi'")
        parser.add_argument("--complexity", type=int, default=None, help="Cap on |p|+|q| of orbit representatives")

    def execute(self, args):
        if args.t_range is not None:
            t_range = value_range(args.t_range, "t-range")
        else:
            t_range = (self.setting("violations", "t_min", 3.0), self.setting("violations", "t_max", 10.0))
        cap = self.pick(args.complexity, "violations", "max_complexity", 12)
        if t_range[0] < 3:
            raise DomainError(f"The symmetric family needs t >= 3, got {t_range[0]}")

        progress(f"🔍 Scanning orbit pairs with |p|+|q| <= {cap} on t in [{t_range[0]}, {t_range[1]}]...")
        crossings = scan_equal_trace_crossings(t_range, cap, jobs=self.jobs)
        progress(f"✅ {len(crossings)} crossing(s)")

        records = [
            {
                "first": str(c.first),
                "second": str(c.second),
                "t": c.t,
                "t_exact": str(c.t_exact),
                "residual": c.residual,
                "multiplicity": c.multiplicity,
            }
            for c in crossings
        ]
        parameters = {"t_range": list(t_range), "complexity": cap}
        summary = {"crossings": len(crossings), "smallest_t": crossings[0].t if crossings else None}
        return CommandResult(
            "violations search", parameters, summary, records,
            ["first", "second", "t", "t_exact", "residual", "multiplicity"],
        )


@register_command("twist ratio")
class TwistRatioCommand(BaseCommand):
    help = "Twist-counting estimates of a length ratio"

    @classmethod
    def add_arguments(cls, parser):
        _add_point_arguments(parser)
        parser.add_argument("--alpha", type=str, required=True)
        parser.add_argument("--beta", type=str, required=True)
        parser.add_argument("--alpha0", type=str, default=None, help="Curve twisted about alpha (default: a complement)")
        parser.add_argument("--beta0", type=str, default=None, help="Curve twisted about beta (default: a complement)")
        parser.add_argument("--iters", type=int, default=None, help="Number of estimates")

    def execute(self, args):
        point = point_arg(args.point, args.boundary, args.leaf, args.theta)
        alpha, beta = slope_arg(args.alpha), slope_arg(args.beta)
        alpha0 = optional_slope(args.alpha0) or complement(alpha)
        beta0 = optional_slope(args.beta0) or complement(beta)
        iters = self.pick(args.iters, "twist", "iterations", 200)

        steps = ratio_estimates(point, alpha, beta, alpha0, beta0, iters)
        records = [
            {"i": s.i, "count": s.count, "estimate": float(s.estimate), "target": s.target, "bound": s.bound, "error": s.error}
            for s in steps
        ]
        summary = {
            "target": steps[0].target,
            "final_estimate": float(steps[-1].estimate),
            "within_bound": all(s.error <= s.bound for s in steps),
        }
        parameters = {
            "point": list(point.as_tuple()),
            "alpha": str(alpha),
            "beta": str(beta),
            "alpha0": str(alpha0),
            "beta0": str(beta0),
            "iters": iters,
        }
        return CommandResult("twist ratio", parameters, summary, records, ["i", "count", "estimate", "target", "bound", "error"])


@register_command("twist sequence")
class TwistSequenceCommand(BaseCommand):
    help = "Lengths of the Dehn twists of alpha0 about alpha"

    @classmethod
    def add_arguments(cls, parser):
        _add_point_arguments(parser)
        parser.add_argument("--alpha", type=str, required=True)
        parser.add_argument("--alpha0", type=str, default=None)
        parser.add_argument("--k-max", type=int, default=None)

    def execute(self, args):
        point = point_arg(args.point, args.boundary, args.leaf, args.theta)
        alpha = slope_arg(args.alpha)
        alpha0 = optional_slope(args.alpha0) or complement(alpha)
        k_max = self.pick(args.k_max, "twist", "k_max", 50)

        lengths = twist_sequence(point, alpha, alpha0, k_max)
        base = slope_length(point, alpha)
        records = [
            {"k": k, "length": length, "linear_term": k * base, "bound_gap": twist_bound_gap(point, alpha, alpha0, k)}
            for k, length in enumerate(lengths)
        ]
        summary = {"alpha_length": base, "bound_holds": all(r["bound_gap"] <= 1e-9 for r in records)}
        parameters = {"point": list(point.as_tuple()), "alpha": str(alpha), "alpha0": str(alpha0), "k_max": k_max}
        return CommandResult("twist sequence", parameters, summary, records, ["k", "length", "linear_term", "bound_gap"])


@register_command("order reversal")
class OrderReversalCommand(BaseCommand):
    help = "Two curves whose length order differs between two tori"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--point1", type=str, required=True, help="First trace triple")
        parser.add_argument("--point2", type=str, required=True, help="Second trace triple")
        parser.add_argument("--max-trace", type=float, default=None)
        parser.add_argument("--bisect", action="store_true", help="Locate equal length on the straight segment")

    def execute(self, args):
        first, second = point_arg(args.point1), point_arg(args.point2)
        max_trace = positive("max-trace", self.pick(args.max_trace, "spectrum", "max_trace", 300.0))
        if not max_trace > 2:
            raise DomainError(f"max-trace must exceed 2, got {max_trace}")

        reversal = find_order_reversal(first, second, length_from_trace(max_trace))
        parameters = {"point1": list(first.as_tuple()), "point2": list(second.as_tuple()), "max_trace": max_trace}
        if reversal is None:
            progress("⚠️  No order reversal among the enumerated curves")
            return CommandResult("order reversal", parameters, {"found": False}, [])

        summary = {
            "found": True,
            "alpha": str(reversal.alpha),
            "beta": str(reversal.beta),
            "margin": reversal.margin,
        }
        records = [
            {"point": "point1", "length_alpha": reversal.first_lengths[0], "length_beta": reversal.first_lengths[1]},
            {"point": "point2", "length_alpha": reversal.second_lengths[0], "length_beta": reversal.second_lengths[1]},
        ]
        if args.bisect:
            a, b = np.array(first.as_tuple()), np.array(second.as_tuple())
            crossing = equal_length_on_path(
                lambda s: FrickePoint(*((1.0 - s) * a + s * b)), reversal.alpha, reversal.beta
            )
            ok, _ = validate(crossing.point)
            summary["crossing"] = {
                "parameter": crossing.parameter,
                "point": list(crossing.point.as_tuple()),
                "residual": crossing.residual,
                "valid": ok,
            }
        return CommandResult("order reversal", parameters, summary, records, ["point", "length_alpha", "length_beta"])


@register_command("flat locus")
class FlatLocusCommand(BaseCommand):
    help = "Equal-length geodesic of two slopes on flat tori"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--s1", type=str, required=True)
        parser.add_argument("--s2", type=str, required=True)
        parser.add_argument("--samples", type=int, default=0, help="Sample points written as records")

    def execute(self, args):
        s1, s2 = slope_arg(args.s1), slope_arg(args.s2)
        geodesic = equal_locus_flat(s1, s2)
        summary = {"kind": geodesic.kind}
        if geodesic.kind == "circle":
            summary["center"] = float(geodesic.center)
            summary["radius"] = float(geodesic.radius)
        summary["endpoints"] = [float(e) for e in geodesic.endpoints]
        summary["endpoints_exact"] = [str(e) for e in geodesic.endpoints]
        summary["coefficients"] = list(geodesic.coefficients)

        records = [
            {"re": tau.re, "im": tau.im, "length1": flat_length(tau, s1), "length2": flat_length(tau, s2)}
            for tau in (geodesic.sample(args.samples) if args.samples > 0 else [])
        ]
        parameters = {"s1": str(s1), "s2": str(s2)}
        return CommandResult("flat locus", parameters, summary, records, ["re", "im", "length1", "length2"])


@register_command("flat reps")
class FlatRepsCommand(BaseCommand):
    help = "Coprime representations of N as a sum of two squares"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--n", type=int, required=True, help="N >= 1")

    def execute(self, args):
        reps = coprime_reps(args.n)
        records = [{"a": a, "b": b, "length": float(np.hypot(a, b))} for a, b in reps]
        return CommandResult("flat reps", {"n": args.n}, {"count": len(reps)}, records, ["a", "b", "length"])


@register_command("flat construct")
class FlatConstructCommand(BaseCommand):
    help = "Square torus with 2^(n-1) equal-length curves"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--n", type=int, required=True, help="Number of primes = 1 mod 4")

    def execute(self, args):
        built = construct_high_multiplicity(args.n)
        square = TauPoint(0.0, 1.0)
        records = [{"a": a, "b": b, "length": flat_length(square, slope_arg(f"{a}/{b}"))} for a, b in built.representations]
        summary = {
            "N": built.N,
            "primes": list(built.primes),
            "multiplicity": built.multiplicity,
            "expected": 2 ** (args.n - 1),
        }
        return CommandResult("flat construct", {"n": args.n}, summary, records, ["a", "b", "length"])


def _invariant_dict(f: Invariant4):
    return {"f1": f.f1, "f2": f.f2, "f3": f.f3, "f4": f.f4}


def _load_traces(path: str) -> FhsTraces:
    with open(path, "r") as f:
        data = yaml.safe_load(f) or {}
    try:
        return FhsTraces(**{k: float(v) for k, v in data.items()})
    except TypeError as exc:
        raise DomainError(f"Trace file {path} must give a, b, c, d, x, xbar, y, ybar, z, zbar: {exc}")


@register_command("fhs verify")
class FhsVerifyCommand(BaseCommand):
    help = "Residuals of the four-holed sphere trace equations"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--file", type=str, default=None, help="YAML/JSON file with all ten half-traces")
        parser.add_argument("--boundary-traces", type=str, default=None, help="a,b,c,d")
        parser.add_argument("--interior", type=str, default=None, help="x,y,z (bars are solved for)")

    def execute(self, args):
        if args.file is not None:
            traces = _load_traces(args.file)
        elif args.boundary_traces is not None and args.interior is not None:
            boundary = float_list(args.boundary_traces, "boundary")
            interior = float_list(args.interior, "interior")
            if len(boundary) != 4 or len(interior) != 3:
                raise DomainError("Need four boundary half-traces and three interior half-traces")
            traces = surface_from(*boundary, *interior)
        else:
            raise DomainError("Give --file, or both --boundary-traces and --interior")

        residuals = check_consistency(traces)
        if traces.non_geometric:
            progress(f"⚠️  Non-geometric half-traces (< 1): {', '.join(traces.non_geometric)}")
        summary = {
            "invariants": _invariant_dict(boundary_invariants(*traces.boundary)),
            "max_residual": max(abs(v) for v in residuals.values()),
            "non_geometric": list(traces.non_geometric),
        }
        records = [{"equation": k, "residual": v} for k, v in residuals.items()]
        return CommandResult("fhs verify", {"traces": asdict(traces)}, summary, records, ["equation", "residual"])


@register_command("fhs counterexample")
class FhsCounterexampleCommand(BaseCommand):
    help = "Two non-isometric spheres with equal interior data"

    @classmethod
    def add_arguments(cls, parser):
        pass

    def execute(self, args):
        report = counterexample_report()
        exact = exact_invariants()
        records = []
        for name, surface, residuals in (
            ("first", report.first, report.residuals[0]),
            ("second", report.second, report.residuals[1]),
        ):
            record = {"surface": name}
            record.update(asdict(surface))
            record["max_residual"] = max(abs(v) for v in residuals.values())
            records.append(record)
        summary = {
            "invariants": [_invariant_dict(f) for f in report.invariants],
            "exact_invariants": [[str(v) for v in f.as_tuple()] for f in exact],
            "invariant_gap": report.invariant_gap,
            "boundary_gap": report.boundary_gap,
        }
        return CommandResult("fhs counterexample", {}, summary, records)


@register_command("fhs resultant")
class FhsResultantCommand(BaseCommand):
    help = "Degree and leading coefficients of the boundary resultants"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--f", type=str, required=True, help="f1,f2,f3,f4 as rationals, e.g. 2,1,1,1")
        parser.add_argument("--method", choices=("subresultant", "sylvester"), default=None)

    def execute(self, args):
        values = rational_list(args.f, "f")
        if len(values) != 4:
            raise DomainError(f"Need four invariants, got {args.f!r}")
        method = self.pick(args.method, "fhs", "resultant_method", "subresultant")
        progress(f"🔍 Computing resultants ({method})...")
        report = resultant_check(Invariant4(*values), method)
        summary = {
            "degree_c": report.degree_c,
            "degree_d": report.degree_d,
            "leading_c": str(report.leading_c),
            "leading_d": str(report.leading_d),
            "expected_leading": str(report.expected_leading),
            "ok": report.ok,
        }
        records = [
            {"degree": report.degree_c - i, "coefficient": str(c)} for i, c in enumerate(report.r_c.all_coeffs())
        ]
        parameters = {"f": [str(v) for v in values], "method": method}
        return CommandResult("fhs resultant", parameters, summary, records, ["degree", "coefficient"])


@register_command("fhs solve")
class FhsSolveCommand(BaseCommand):
    help = "Boundary half-traces from the invariants"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--f", type=str, required=True, help="f1,f2,f3,f4")
        parser.add_argument("--case", choices=CASES + ("general",), default="general")

    def execute(self, args):
        values = float_list(args.f, "f")
        if len(values) != 4:
            raise DomainError(f"Need four invariants, got {args.f!r}")
        f = Invariant4(*values)
        tol = positive("tol", self.setting("fhs", "tol", 1e-9))
        if args.case == "general":
            solved = solve_boundary_general(f, tol=tol)
        else:
            solved = solve_boundary_symmetric(f, args.case, tol)
        if not solved.consistent:
            progress(f"⚠️  Invariants inconsistent with {args.case} (residual {solved.residual:.3g})")
        records = [dict(zip("abcd", s)) for s in solved.solutions]
        summary = {
            "case": solved.case,
            "solutions": len(solved.solutions),
            "residual": solved.residual,
            "consistent": solved.consistent,
            "best_effort": solved.best_effort,
        }
        return CommandResult("fhs solve", {"f": values, "case": args.case}, summary, records, ["a", "b", "c", "d"])


@register_command("zeros scan")
class ZerosScanCommand(BaseCommand):
    help = "Positive zeros of a cosh or power sum"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--a", type=str, required=True, help="a1,a2")
        parser.add_argument("--b", type=str, default="", help="b1,...,bk")
        parser.add_argument("--t-max", type=float, required=True)
        parser.add_argument("--family", choices=FAMILIES, default="cosh")

    def execute(self, args):
        spec = CoshSumSpec(tuple(float_list(args.a, "a")), tuple(float_list(args.b, "b")))
        tol = self.setting("zeros", "tol", 1e-12)
        grid_points = self.setting("zeros", "grid_points", 10_000)
        plateau_tol = self.setting("zeros", "plateau_tol", 1e-13)
        scan = count_positive_zeros(
            spec, positive("t-max", args.t_max), tol=tol, grid_points=grid_points, family=args.family, plateau_tol=plateau_tol
        )
        summary = {"count": scan.count, "plateau": scan.plateau, "dominant": spec.dominates}
        records = [{"root": r} for r in scan.roots]
        parameters = {"a": list(spec.a), "b": list(spec.b), "t_max": args.t_max, "family": args.family}
        return CommandResult("zeros scan", parameters, summary, records, ["root"])
