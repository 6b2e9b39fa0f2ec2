"""Step-by-step replay of the infeasibility case analysis for the built-in
seventeen-segment family.

Each step is a decidable geometric fact about the labeled coordinates,
evaluated with kernel operations only: hull membership, forced hull edges,
central symmetry, and "forces external" facts of the form

    in the hull boundary order of a named point set, the two endpoints of a
    chord are non-adjacent and the remaining points occupy both arcs,

which by the circular-order property means the chord cannot be an internal
diagonal of any simple sub-polygon visiting those points, hence (closing the
corresponding boundary path) the chord would be external to the full
polygon.  The logical skeleton connecting the facts is encoded once in the
fixed step order; replay checks the facts the argument consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .family import LabeledFamily, SegmentFamily, is_centrally_symmetric
from .geometry import (
    Point,
    Segment,
    SegmentRelation,
    convex_hull,
    segment_intersection,
    strictly_between,
)

REQUIRED_LABELS = tuple("abcdefgh") + tuple("ijklmn") + tuple("pqrstuvwxy")

HULL_CYCLE = ("h", "a", "b", "c", "d", "e", "f", "g")
FORCED_EDGE_PAIRS = (("h", "a"), ("b", "c"), ("d", "e"), ("f", "g"))


@dataclass(frozen=True)
class ProofStep:
    id: str
    description: str
    points_involved: tuple[str, ...]
    check: str  # HullMembership | ForcedHullEdge | SymmetryFact | HullOrderFact
    passed: bool
    witness: str

    def render(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{self.id:<4} {tag}  {self.description}  [{self.witness}]"


@dataclass(frozen=True)
class ProofReport:
    steps: tuple[ProofStep, ...]

    @property
    def overall(self) -> bool:
        return all(s.passed for s in self.steps)

    def step(self, step_id: str) -> ProofStep:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def first_failure(self) -> str | None:
        for s in self.steps:
            if not s.passed:
                return s.id
        return None

    def render_text(self) -> str:
        lines = [s.render() for s in self.steps]
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)

    def as_json_obj(self) -> list[dict]:
        return [
            {
                "id": s.id,
                "description": s.description,
                "points": list(s.points_involved),
                "check": s.check,
                "result": "pass" if s.passed else "fail",
                "witness": s.witness,
            }
            for s in self.steps
        ]


def forced_hull_edges(family: SegmentFamily) -> set[Segment]:
    """Family segments whose endpoints are consecutive on the hull boundary.

    By the circular-order property such a segment must be an edge of every
    circumscribing polygon: the polygon visits boundary points in boundary
    order, and a boundary-to-boundary chord spanning no other boundary point
    can only avoid being external by being an edge.
    """
    hull = convex_hull(family.endpoint_set())
    forced = set()
    for seg in family.segments:
        if hull.contains(seg.a) and hull.contains(seg.b) \
                and hull.adjacent(seg.a, seg.b):
            forced.add(seg)
    return forced


def _boundary_labels(lf: LabeledFamily, names: Iterable[str]) -> tuple[str, ...]:
    """Hull boundary order of the named points, as labels, or raise."""
    names = list(names)
    pts = lf.points(names)
    hull = convex_hull(pts)
    by_point = {p: n for n, p in zip(names, pts)}
    return tuple(by_point[p] for p in hull.points)


def _cyclically_nonadjacent(order: Sequence[str], x: str, y: str) -> bool:
    n = len(order)
    ix, iy = order.index(x), order.index(y)
    return (ix + 1) % n != iy and (iy + 1) % n != ix


def _forces_external(lf: LabeledFamily, names: Sequence[str],
                     chord: tuple[str, str]) -> tuple[bool, str]:
    """All named points on their joint hull, chord endpoints non-adjacent."""
    pts = lf.points(names)
    hull = convex_hull(pts)
    missing = [n for n, p in zip(names, pts) if not hull.contains(p)]
    if missing:
        return False, f"not on hull of {{{','.join(names)}}}: {','.join(missing)}"
    order = _boundary_labels(lf, names)
    if not _cyclically_nonadjacent(order, *chord):
        return False, (f"{chord[0]}{chord[1]} adjacent in hull order "
                       f"({','.join(order)})")
    return True, f"hull order ({','.join(order)})"


def _chord_is_gated(lf: LabeledFamily, alpha: Point, beta: Point,
                    gate: Segment) -> bool:
    """The straight chord alpha-beta cannot be used without meeting the gate.

    True when the chord meets the gate segment, properly crosses some family
    segment, or passes through another endpoint; any of these makes it
    unusable as a polygon edge except through the gate's endpoints.
    """
    chord = Segment(alpha, beta)
    if segment_intersection(chord, gate) is not SegmentRelation.DISJOINT:
        return True
    for seg in lf.family.segments:
        if segment_intersection(chord, seg) is SegmentRelation.PROPER_CROSS:
            return True
    for p in lf.family.endpoint_set():
        if p not in (alpha, beta) and strictly_between(p, alpha, beta):
            return True
    return False


def _step(step_id: str, description: str, names: Iterable[str], check: str,
          passed: bool, witness: str) -> ProofStep:
    return ProofStep(step_id, description, tuple(names), check, passed, witness)


def _eval_s1(lf: LabeledFamily) -> ProofStep:
    desc = "corner labels lie on the hull of all endpoints, in cycle order"
    hull = convex_hull(lf.family.endpoint_set())
    missing = [n for n in HULL_CYCLE if not hull.contains(lf.point(n))]
    if missing:
        return _step("S1", desc, HULL_CYCLE, "HullMembership", False,
                     f"off hull: {','.join(missing)}")
    by_point = {lf.point(n): n for n in HULL_CYCLE}
    filtered = tuple(by_point[p] for p in hull.points if p in by_point)
    doubled = filtered + filtered
    fwd = any(doubled[i:i + 8] == HULL_CYCLE for i in range(8))
    rev = any(doubled[i:i + 8] == HULL_CYCLE[::-1] for i in range(8))
    ok = fwd or rev
    return _step("S1", desc, HULL_CYCLE, "HullMembership", ok,
                 f"boundary order ({','.join(filtered)})")


def _eval_s2(lf: LabeledFamily) -> ProofStep:
    desc = "exactly the four corner-to-corner segments are forced hull edges"
    want = {Segment(lf.point(x), lf.point(y)) for x, y in FORCED_EDGE_PAIRS}
    got = forced_hull_edges(lf.family)
    ok = got == want
    extra = sorted(str(s) for s in got - want)
    missing = sorted(str(s) for s in want - got)
    witness = "forced = expected" if ok else \
        f"missing={missing or '-'} unexpected={extra or '-'}"
    return _step("S2", desc, tuple(x + y for x, y in FORCED_EDGE_PAIRS),
                 "ForcedHullEdge", ok, witness)


def _eval_s3(lf: LabeledFamily) -> ProofStep:
    desc = "point reflection through the origin maps the family to itself"
    ok = is_centrally_symmetric(lf.family)
    return _step("S3", desc, (), "SymmetryFact", ok,
                 "sigma(family) == family" if ok else "asymmetric segment set")


def _eval_s4(lf: LabeledFamily) -> ProofStep:
    desc = ("a top-left path holding the center gate pins both wing "
            "endpoints: wings split a,b on the joint hull, non-adjacent")
    for extra in (("m",), ("n",), ("m", "n")):
        names = ("a", "b", "i", "j") + extra
        pts = lf.points(names)
        hull = convex_hull(pts)
        missing = [nm for nm, p in zip(names, pts) if not hull.contains(p)]
        if missing:
            return _step("S4", desc, names, "HullOrderFact", False,
                         f"off hull with {{{','.join(extra)}}}: {','.join(missing)}")
        order = _boundary_labels(lf, names)
        if _cyclically_nonadjacent(order, "a", "b"):
            return _step("S4", desc, names, "HullOrderFact", False,
                         f"a,b separated in ({','.join(order)})")
        if not _cyclically_nonadjacent(order, "i", "j"):
            return _step("S4", desc, names, "HullOrderFact", False,
                         f"i,j adjacent in ({','.join(order)})")
    return _step("S4", desc, ("a", "b", "i", "j", "m", "n"), "HullOrderFact",
                 True, "i,j between a,b and non-adjacent for m, n, and both")


def _eval_s5(lf: LabeledFamily) -> ProofStep:
    desc = ("the right gate separates: every usable straight chord between "
            "the two sides of its vertical line meets the gate")
    k, l = lf.point("k"), lf.point("l")
    if k.x != l.x:
        return _step("S5", desc, ("k", "l"), "HullOrderFact", False,
                     "gate segment is not vertical")
    gate = Segment(k, l)
    strip_x = k.x
    seg_pairs = {frozenset(s.endpoints) for s in lf.family.segments}
    # Chords joining two of the eight corner anchors are never path edges:
    # each anchor is adjacent only to its forced-edge partner and to the
    # endpoints of its own boundary path.
    anchors = {lf.point(n) for n in HULL_CYCLE}
    pts = sorted(lf.family.endpoint_set())
    left = [p for p in pts if p.x < strip_x]
    right = [p for p in pts if p.x > strip_x]
    checked = 0
    for alpha in left:
        for beta in right:
            if frozenset((alpha, beta)) in seg_pairs:
                continue
            if alpha in anchors and beta in anchors:
                continue
            checked += 1
            if not _chord_is_gated(lf, alpha, beta, gate):
                return _step("S5", desc, ("k", "l"), "HullOrderFact", False,
                             f"free corridor {alpha}->{beta}")
    return _step("S5", desc, ("k", "l"), "HullOrderFact", True,
                 f"all {checked} cross-chords gated")


_FORCES_EXTERNAL_STEPS = (
    ("S6", ("a", "b", "j", "k", "i"), ("i", "j"), (),
     "skipping the low gate endpoint leaves the left wings external"),
    ("S7", ("a", "b", "k", "?", "l"), ("k", "l"), tuple("pqrstuvwxy"),
     "a left path reaching past the right gate makes the gate external"),
    ("S8", ("g", "u", "?", "t", "h"), ("u", "t"), ("x", "y", "w", "v", "k"),
     "the top-right path dipping below the crossbar makes it external"),
    ("S9", ("e", "w", "?", "v", "f"), ("w", "v"), ("x", "y", "t"),
     "the bottom-right path skipping the crossbar's right end loses vw"),
    ("S10", ("e", "t", "?", "u", "f"), ("t", "u"), ("p", "q", "r", "s"),
     "the bottom-right path climbing above the crossbar makes it external"),
    ("S11", ("g", "q", "?", "p", "h"), ("p", "q"), ("r", "s", "t"),
     "the top-right path reaching left of the high gate loses it"),
)


def _eval_forces(lf: LabeledFamily, step_id: str, pattern: tuple[str, ...],
                 chord: tuple[str, str], zs: tuple[str, ...],
                 desc: str) -> ProofStep:
    if not zs:
        ok, witness = _forces_external(lf, pattern, chord)
        return _step(step_id, desc, pattern, "HullOrderFact", ok, witness)
    witnesses = []
    for z in zs:
        names = tuple(z if nm == "?" else nm for nm in pattern)
        ok, witness = _forces_external(lf, names, chord)
        if not ok:
            return _step(step_id, desc, names, "HullOrderFact", False,
                         f"z={z}: {witness}")
        witnesses.append(f"z={z}")
    return _step(step_id, desc, pattern, "HullOrderFact", True,
                 f"holds for {', '.join(witnesses)}")


def replay_s2(lf: LabeledFamily) -> ProofReport:
    """Evaluate the ordered case-analysis facts on a labeled family.

    Raises KeyError when a required label is missing; individual geometric
    failures are reported as failing steps, never exceptions.
    """
    missing = [n for n in REQUIRED_LABELS if n not in lf.labels]
    if missing:
        raise KeyError(f"missing labels: {', '.join(missing)}")
    steps = [_eval_s1(lf), _eval_s2(lf), _eval_s3(lf), _eval_s4(lf),
             _eval_s5(lf)]
    for step_id, pattern, chord, zs, desc in _FORCES_EXTERNAL_STEPS:
        steps.append(_eval_forces(lf, step_id, pattern, chord, zs, desc))
    return ProofReport(tuple(steps))
