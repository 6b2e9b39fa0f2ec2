"""Decision procedure for circumscribing-polygon existence.

solve() runs a pruned exhaustive backtracking search over vertex cycles;
brute_force_solve() is the independent oracle for small instances
(plain enumeration of cyclic orders, no pruning beyond the quotient);
random_family() is the seeded test-instance source.

The hot search kernel has two interchangeable backends: a Cython extension
(circumpoly._fastsearch) and a pure-Python twin (circumpoly._pysearch).
The compiled one is selected at import when available.
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import _pysearch
from .family import SegmentFamily, validate_family
from .geometry import Point, Segment, convex_hull, cross
from .verifier import Certificate, Violation, circumscribes

try:  # compiled hot kernel; the pure twin is the fallback
    from . import _fastsearch  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _fastsearch = None

BACKENDS: dict[str, object] = {"python": _pysearch}
if _fastsearch is not None:
    BACKENDS["compiled"] = _fastsearch

DEFAULT_BACKEND = "compiled" if _fastsearch is not None else "python"

PRUNE_RULES = ("hull_order", "edge_cross", "segment_cross")


class Verdict(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    ABORTED = "aborted"


@dataclass
class SolveConfig:
    prune_hull_order: bool = True
    prune_segment_cross: bool = True
    prune_edge_cross: bool = True
    node_limit: int = 10 ** 9
    time_limit: float = 3600.0
    workers: int = 1
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("node and time limits must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.deterministic and self.workers != 1:
            raise ValueError("deterministic mode requires workers = 1")


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    pruned_by_rule: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    peak_depth: int = 0

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "pruned_by_rule": dict(self.pruned_by_rule),
            "elapsed": round(self.elapsed, 6),
            "peak_depth": self.peak_depth,
        }


@dataclass
class SolveOutcome:
    verdict: Verdict
    stats: SearchStats
    certificate: Certificate | None = None
    abort_reason: str | None = None


@dataclass(frozen=True)
class _Tables:
    """Index-space view of a family, shared by both search backends."""

    points: tuple[Point, ...]
    xs: list[int]
    ys: list[int]
    seg_flat: list[int]
    orient: list[int]  # flat n*n*n table of cross-product signs
    hull_pos: list[int]
    hull_n: int
    forced_after: list[int]
    order: list[list[int]]


def _direction_sort(u: int, others: list[int], xs, ys) -> list[int]:
    def key(v: int):
        dx, dy = xs[v] - xs[u], ys[v] - ys[u]
        if dy > 0 or (dy == 0 and dx > 0):
            half = 0
        else:
            half = 1
        return (half, _Frac(-dx, dy) if dy != 0 else _Frac(-1, 0) if half == 0
                else _Frac(1, 0), dx * dx + dy * dy)
    return sorted(others, key=key)


class _Frac:
    """Exact comparable fraction dx/dy used only for angular sorting."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        if den < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    def __lt__(self, other: "_Frac") -> bool:
        if self.den == 0 and other.den == 0:
            return self.num < other.num
        if self.den == 0:
            return self.num < 0
        if other.den == 0:
            return other.num > 0
        return self.num * other.den < other.num * self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Frac):
            return NotImplemented
        return not self < other and not other < self


def build_tables(family: SegmentFamily) -> _Tables:
    points = tuple(sorted(family.endpoint_set()))
    n = len(points)
    if n > 64:
        raise ValueError("search kernel supports at most 64 endpoints")
    index = {p: i for i, p in enumerate(points)}
    xs = [p.x for p in points]
    ys = [p.y for p in points]

    seg_flat: list[int] = []
    partner = [-1] * n
    for seg in family.segments:
        i, j = index[seg.a], index[seg.b]
        seg_flat.extend((i, j))
        partner[i], partner[j] = j, i

    signs = [0] * (n * n * n)
    for i in range(n):
        for j in range(n):
            base = (i * n + j) * n
            ax, ay = xs[i], ys[i]
            abx, aby = xs[j] - ax, ys[j] - ay
            for k in range(n):
                c = abx * (ys[k] - ay) - aby * (xs[k] - ax)
                signs[base + k] = 1 if c > 0 else (-1 if c < 0 else 0)

    hull = convex_hull(points)
    boundary = hull.points
    start_pos = boundary.index(points[0])  # lexicographic min is a hull corner
    rotated = boundary[start_pos:] + boundary[:start_pos]
    hull_pos = [-1] * n
    for pos, p in enumerate(rotated):
        hull_pos[index[p]] = pos
    hull_n = len(rotated)

    forced_after = [-1] * n
    for i in range(n):
        pos = hull_pos[i]
        if pos >= 0 and partner[i] >= 0:
            nxt = index[rotated[(pos + 1) % hull_n]]
            if nxt == partner[i]:
                forced_after[i] = nxt

    order = []
    for u in range(n):
        others = [v for v in range(n) if v != u]
        ordered = _direction_sort(u, others, xs, ys)
        if partner[u] >= 0:
            ordered.remove(partner[u])
            ordered.insert(0, partner[u])
        order.append(ordered)

    return _Tables(points, xs, ys, seg_flat, signs, hull_pos, hull_n,
                   forced_after, order)


def _run_backend(backend, tables: _Tables, cfg: SolveConfig,
                 node_limit: int, time_limit: float):
    return backend.run_search(
        len(tables.points), tables.xs, tables.ys, tables.seg_flat,
        tables.orient, tables.hull_pos, tables.hull_n, tables.forced_after,
        tables.order, cfg.prune_hull_order, cfg.prune_segment_cross,
        cfg.prune_edge_cross, node_limit, time_limit)


def solve(family: SegmentFamily, cfg: SolveConfig | None = None,
          backend: str | None = None) -> SolveOutcome:
    """Decide whether the family admits a circumscribing polygon.

    Returns FEASIBLE with a re-verified certificate, INFEASIBLE after
    exhausting the pruned search space, or ABORTED when a node or time
    limit was hit first.
    """
    cfg = cfg or SolveConfig()
    if len(family.endpoint_set()) < 4:
        raise ValueError("family must have at least 4 endpoints")
    # Re-validate: solve's contract does not trust the caller.
    validate_family(family.segments)

    name = backend or DEFAULT_BACKEND
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {sorted(BACKENDS)}")
    mod = BACKENDS[name]

    tables = build_tables(family)
    status, cycle, raw = _run_backend(mod, tables, cfg,
                                      cfg.node_limit, cfg.time_limit)
    nodes, p_hull, p_edge, p_seg, peak, elapsed = raw
    stats = SearchStats(
        nodes_expanded=nodes,
        pruned_by_rule={"hull_order": p_hull, "edge_cross": p_edge,
                        "segment_cross": p_seg},
        elapsed=elapsed,
        peak_depth=peak,
    )
    if status == _pysearch.STATUS_FEASIBLE:
        verts = [tables.points[i] for i in cycle]
        result = circumscribes(verts, family)
        if isinstance(result, Violation):  # pragma: no cover - kernel bug trap
            raise AssertionError(f"kernel returned an invalid cycle: {result}")
        return SolveOutcome(Verdict.FEASIBLE, stats, certificate=result)
    if status == _pysearch.STATUS_INFEASIBLE:
        return SolveOutcome(Verdict.INFEASIBLE, stats)
    reason = "node limit" if status == _pysearch.STATUS_NODE_LIMIT else "time limit"
    return SolveOutcome(Verdict.ABORTED, stats, abort_reason=reason)


def brute_force_solve(family: SegmentFamily, cap: int = 12) -> SolveOutcome:
    """Oracle: try every distinct cyclic vertex order through circumscribes.

    The first vertex is fixed and reflections are quotiented; there is no
    pruning beyond that.  Only for families with at most `cap` endpoints.
    """
    points = sorted(family.endpoint_set())
    m = len(points)
    if m > cap:
        raise ValueError(f"family has {m} endpoints, exceeding cap {cap}")
    t0 = time.monotonic()
    first, rest = points[0], points[1:]
    tested = 0
    for perm in itertools.permutations(rest):
        if perm[0] > perm[-1]:
            continue  # reflection quotient
        tested += 1
        result = circumscribes((first,) + perm, family)
        if isinstance(result, Certificate):
            stats = SearchStats(nodes_expanded=tested,
                                elapsed=time.monotonic() - t0,
                                peak_depth=m)
            return SolveOutcome(Verdict.FEASIBLE, stats, certificate=result)
    stats = SearchStats(nodes_expanded=tested,
                        elapsed=time.monotonic() - t0, peak_depth=m)
    return SolveOutcome(Verdict.INFEASIBLE, stats)


def random_family(n: int, box: tuple[int, int, int, int] = (-10, -10, 10, 10),
                  axis_parallel: bool = True, seed: int = 0,
                  max_attempts: int | None = None) -> SegmentFamily:
    """Seeded random family of n pairwise-disjoint segments inside box.

    Identical arguments give identical output.  Raises FamilyError-style
    ValueError when the box is too small to place n segments.
    """
    if n < 2:
        raise ValueError("need at least 2 segments")
    xmin, ymin, xmax, ymax = box
    cells = (xmax - xmin + 1) * (ymax - ymin + 1)
    if cells < (2 * n) ** 2:
        raise ValueError("box too small for the requested segment count")
    rng = random.Random(seed)
    attempts_left = max_attempts if max_attempts is not None else 400 * n
    segs: list[Segment] = []
    from .geometry import SegmentRelation, segment_intersection

    while len(segs) < n and attempts_left > 0:
        attempts_left -= 1
        x1 = rng.randint(xmin, xmax)
        y1 = rng.randint(ymin, ymax)
        length = rng.randint(1, 4)
        if axis_parallel:
            if rng.random() < 0.5:
                x2, y2 = x1 + length, y1
            else:
                x2, y2 = x1, y1 + length
        else:
            x2 = x1 + rng.randint(-4, 4)
            y2 = y1 + rng.randint(-4, 4)
        if (x1, y1) == (x2, y2):
            continue
        if not (xmin <= x2 <= xmax and ymin <= y2 <= ymax):
            continue
        cand = Segment(Point(x1, y1), Point(x2, y2))
        if all(segment_intersection(cand, s) is SegmentRelation.DISJOINT
               for s in segs):
            segs.append(cand)
            # not-all-collinear can fail only while everything is on one line;
            # drop the newest segment if the finished family would be flat
            if len(segs) == n:
                pts = [p for s in segs for p in s.endpoints]
                a, b = pts[0], next(p for p in pts if p != pts[0])
                if all(cross(a, b, p) == 0 for p in pts):
                    segs.pop()
    if len(segs) < n:
        raise ValueError("placement failed: box too crowded for family")
    return SegmentFamily(tuple(sorted(segs)), bounds=box)


def solve_parallel(family: SegmentFamily, cfg: SolveConfig,
                   backend: str | None = None) -> SolveOutcome:
    """Worker-parallel solve: splits the first-level branch set.

    The verdict is independent of the worker count; only stats may differ
    when deterministic=False.  With workers=1 this is plain solve().
    """
    if cfg.workers == 1:
        return solve(family, cfg, backend)
    from concurrent.futures import ProcessPoolExecutor

    branches = _first_level_branches(family, cfg)
    if not branches:
        return SolveOutcome(Verdict.INFEASIBLE, SearchStats())
    t0 = time.monotonic()
    per_branch_nodes = max(1, cfg.node_limit // len(branches))
    jobs = [(family.segments, cfg, backend, b, per_branch_nodes)
            for b in branches]
    merged = SearchStats(pruned_by_rule={r: 0 for r in PRUNE_RULES})
    feasible: SolveOutcome | None = None
    aborted: SolveOutcome | None = None
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for outcome in pool.map(_solve_branch, jobs):
            merged.nodes_expanded += outcome.stats.nodes_expanded
            merged.peak_depth = max(merged.peak_depth, outcome.stats.peak_depth)
            for rule, cnt in outcome.stats.pruned_by_rule.items():
                merged.pruned_by_rule[rule] = merged.pruned_by_rule.get(rule, 0) + cnt
            if outcome.verdict is Verdict.FEASIBLE and feasible is None:
                feasible = outcome
                break
            if outcome.verdict is Verdict.ABORTED and aborted is None:
                aborted = outcome
    merged.elapsed = time.monotonic() - t0
    if feasible is not None:
        return SolveOutcome(Verdict.FEASIBLE, merged,
                            certificate=feasible.certificate)
    if aborted is not None:
        return SolveOutcome(Verdict.ABORTED, merged,
                            abort_reason=aborted.abort_reason)
    return SolveOutcome(Verdict.INFEASIBLE, merged)


def _first_level_branches(family: SegmentFamily, cfg: SolveConfig) -> list[int]:
    """Second-path-vertex candidates that survive the eager edge checks."""
    tables = build_tables(family)
    n = len(tables.points)
    branches = []
    forced = tables.forced_after[0] if cfg.prune_hull_order else -1
    for v in tables.order[0]:
        if forced >= 0 and v != forced:
            continue
        hp = tables.hull_pos[v]
        if cfg.prune_hull_order and hp >= 0 and hp != 1:
            continue
        ok = _pysearch._edge_ok(tables.orient, n, tables.xs, tables.ys,
                                [0, v], 1, 0, v, tables.seg_flat,
                                len(tables.seg_flat) // 2,
                                cfg.prune_edge_cross, cfg.prune_segment_cross,
                                [0, 0, 0])
        if ok:
            branches.append(v)
    return branches


def _solve_branch(job) -> SolveOutcome:
    segments, cfg, backend, first, node_limit = job
    family = SegmentFamily(tuple(segments))
    mod = BACKENDS[backend or DEFAULT_BACKEND]
    tables = build_tables(family)
    n = len(tables.points)
    # Restrict the root's candidate list to the assigned branch.
    order = [list(o) for o in tables.order]
    order[0] = [first]
    status, cycle, raw = mod.run_search(
        n, tables.xs, tables.ys, tables.seg_flat, tables.orient,
        tables.hull_pos, tables.hull_n, tables.forced_after, order,
        cfg.prune_hull_order, cfg.prune_segment_cross, cfg.prune_edge_cross,
        node_limit, cfg.time_limit)
    nodes, p_hull, p_edge, p_seg, peak, elapsed = raw
    stats = SearchStats(nodes, {"hull_order": p_hull, "edge_cross": p_edge,
                                "segment_cross": p_seg}, elapsed, peak)
    if status == _pysearch.STATUS_FEASIBLE:
        verts = [tables.points[i] for i in cycle]
        result = circumscribes(verts, family)
        assert isinstance(result, Certificate)
        return SolveOutcome(Verdict.FEASIBLE, stats, certificate=result)
    if status == _pysearch.STATUS_INFEASIBLE:
        return SolveOutcome(Verdict.INFEASIBLE, stats)
    reason = "node limit" if status == _pysearch.STATUS_NODE_LIMIT else "time limit"
    return SolveOutcome(Verdict.ABORTED, stats, abort_reason=reason)
