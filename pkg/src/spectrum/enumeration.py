"""
Simple length spectrum of a marked one-holed torus.

Slopes are enumerated over the Farey tree in two halves: slopes with p, q > 0
grow from the pair ((1,0),(0,1)) with mediant (1,1); slopes with p < 0 grow the
same way on the reflected triple (x, y, xy - z). A node is an edge (u, v) with
mediant m = u + v. When tr(m) exceeds the bound and tr(m) >= max(tr u, tr v),
every mediant below the node is larger still, so the subtree is dropped.
"""

import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from src.curves.slopes import Slope, isometry_orbit
from src.errors import DomainError
from src.fricke.core import length_from_trace, trace_from_length
from src.parallel import parallel_map
from src.teich.space import FrickePoint, validate

DEFAULT_DEPTH_CAP = 64
BOUND_SLACK = 1e-12

# (u, v, tr u, tr v, tr(u+v), depth)
_Node = Tuple[Tuple[int, int], Tuple[int, int], float, float, float, int]


@dataclass(frozen=True)
class SpectrumEntry:
    slope: Slope
    trace: float
    length: float


@dataclass(frozen=True)
class MultiplicityClass:
    length: float
    tolerance: float
    members: Tuple[Slope, ...]
    trace: float

    @property
    def multiplicity(self) -> int:
        return len(self.members)


def _children(node: _Node) -> List[_Node]:
    u, v, tu, tv, tm, depth = node
    m = (u[0] + v[0], u[1] + v[1])
    return [
        (u, m, tu, tm, tu * tm - tv, depth + 1),
        (m, v, tm, tv, tm * tv - tu, depth + 1),
    ]


def _expand_subtree(task: Tuple[_Node, float, int]) -> Tuple[List[Tuple[Tuple[int, int], float]], bool]:
    root, bound, depth_cap = task
    found = []
    truncated = False
    queue = deque([root])
    while queue:
        node = queue.popleft()
        u, v, tu, tv, tm, depth = node
        if tm > bound and tm >= max(tu, tv):
            continue
        if tm <= bound:
            found.append(((u[0] + v[0], u[1] + v[1]), tm))
        if depth >= depth_cap:
            truncated = True
            continue
        queue.extend(_children(node))
    return found, truncated


def _split(root: _Node, levels: int) -> List[_Node]:
    """Nodes exactly `levels` below root."""
    nodes = [root]
    for _ in range(levels):
        nodes = [child for node in nodes for child in _children(node)]
    return nodes


def enumerate_by_trace(
    point: FrickePoint,
    max_trace: float,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    jobs: int = 1,
) -> List[SpectrumEntry]:
    """
    All simple closed geodesics with trace <= max_trace, each once, sorted by length.

    Args:
        point: Valid marked torus
        max_trace: Trace bound
        depth_cap: Maximum Farey depth explored below either half
        jobs: Worker processes for the subtrees
    """
    ok, reason = validate(point)
    if not ok:
        raise DomainError(f"Invalid point {point}: {reason}")

    bound = max_trace * (1.0 + BOUND_SLACK)
    x, y, z = point.as_tuple()
    halves = [
        (1, ((1, 0), (0, 1), x, y, z, 0)),
        (-1, ((1, 0), (0, 1), x, y, x * y - z, 0)),
    ]

    # the two levels above each split point are scanned here; below runs in workers
    levels = 2
    tasks, signs, entries = [], [], []
    for sign, root in halves:
        shallow = [root] + _split(root, 1)
        for node in shallow:
            u, v, tu, tv, tm, depth = node
            if tm <= bound:
                m = (u[0] + v[0], u[1] + v[1])
                entries.append((Slope(sign * m[0], m[1]), tm))
        for node in _split(root, levels):
            tasks.append((node, bound, depth_cap))
            signs.append(sign)

    truncated = False
    for sign, (found, cut) in zip(signs, parallel_map(_expand_subtree, tasks, jobs)):
        truncated = truncated or cut
        entries.extend((Slope(sign * m[0], m[1]), tm) for m, tm in found)

    if x <= bound:
        entries.append((Slope(1, 0), x))
    if y <= bound:
        entries.append((Slope(0, 1), y))

    if truncated:
        warnings.warn(f"Farey depth cap {depth_cap} reached; spectrum may be incomplete", RuntimeWarning)

    result = [SpectrumEntry(s, float(t), length_from_trace(t)) for s, t in entries]
    return sorted(result, key=lambda e: (e.length, e.slope))


def enumerate_simple(
    point: FrickePoint,
    max_length: float,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    jobs: int = 1,
) -> List[SpectrumEntry]:
    """All simple closed geodesics of length <= max_length, each once, sorted by length."""
    return enumerate_by_trace(point, trace_from_length(max_length), depth_cap=depth_cap, jobs=jobs)


def group_entries(entries: Sequence[SpectrumEntry], tol: float = 1e-9) -> List[MultiplicityClass]:
    """
    Single-linkage classes of a length-sorted spectrum.

    Consecutive lengths within tol share a class; tol = 0 groups exact ties only.
    """
    if tol < 0:
        raise DomainError(f"Tolerance must be nonnegative, got {tol}")

    classes = []
    current: List[SpectrumEntry] = []
    for entry in sorted(entries, key=lambda e: (e.length, e.slope)):
        if current and entry.length - current[-1].length > tol:
            classes.append(current)
            current = []
        current.append(entry)
    if current:
        classes.append(current)

    return [
        MultiplicityClass(
            length=group[0].length,
            tolerance=tol,
            members=tuple(sorted(e.slope for e in group)),
            trace=group[0].trace,
        )
        for group in classes
    ]


def multiplicity_histogram(
    point: FrickePoint,
    max_length: float,
    tol: float = 1e-9,
    jobs: int = 1,
) -> List[MultiplicityClass]:
    return group_entries(enumerate_simple(point, max_length, jobs=jobs), tol)


def max_multiplicity(classes: Sequence[MultiplicityClass]) -> int:
    return max((c.multiplicity for c in classes), default=0)


def markoff_violations(entries: Sequence[SpectrumEntry], tol: float = 1e-9) -> List[Tuple[Slope, Slope]]:
    """Pairs of curves with lengths within tol that lie in different isometry orbits."""
    lengths = {e.slope: e.length for e in entries}
    violations = []
    for group in group_entries(entries, tol):
        for first, second in combinations(group.members, 2):
            if abs(lengths[first] - lengths[second]) > tol:
                continue
            if second not in isometry_orbit(first):
                violations.append((first, second))
    return violations


def check_markoff_property(
    point: FrickePoint,
    max_length: float,
    tol: float = 1e-9,
    jobs: int = 1,
) -> List[Tuple[Slope, Slope]]:
    """
    Equal-length pairs not exchanged by the symmetries of the symmetric torus.

    An empty list means every equal-length pair up to max_length is related by
    the isometry orbit action at resolution tol.
    """
    return markoff_violations(enumerate_simple(point, max_length, jobs=jobs), tol)
