"""Certificate checking for circumscribing polygons.

A polygon circumscribes a segment family when its vertex set is exactly the
family's endpoints and every family segment is a polygon edge or an internal
diagonal.  This module classifies chords, re-checks certificates from
scratch, and provides the circular hull-order predicate that both the solver
and the proof replay rely on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .family import SegmentFamily
from .geometry import (
    HullSequence,
    Point,
    PointLocation,
    Polygon,
    Segment,
    SegmentRelation,
    is_simple_polygon,
    point_in_polygon,
    segment_intersection,
)


class ChordClass(enum.Enum):
    EDGE = "edge"
    INTERNAL = "internal"
    EXTERNAL = "external"
    BLOCKED = "blocked"


@dataclass(frozen=True)
class Certificate:
    """A verified circumscribing polygon with per-segment classification."""

    polygon: Polygon
    classification: Mapping[Segment, ChordClass]

    def reflected(self) -> "Certificate":
        return Certificate(
            self.polygon.reflected(),
            {seg.reflected(): cls for seg, cls in self.classification.items()},
        )


@dataclass(frozen=True)
class Violation:
    """First failed circumscription condition, with a witness."""

    reason: str
    witness: object = None

    def __str__(self) -> str:
        if self.witness is None:
            return self.reason
        return f"{self.reason}: {self.witness}"


def classify_chord(poly: Polygon, a: Point, b: Point) -> ChordClass:
    """Classify the chord ab of a simple polygon.

    EDGE iff a,b adjacent; BLOCKED if the open chord meets the boundary
    anywhere besides its endpoints (crossing an edge, passing through a
    vertex, overlapping an edge); otherwise INTERNAL/EXTERNAL by an exact
    midpoint test on doubled coordinates.
    """
    verts = poly.vertices
    n = len(verts)
    if a == b or a not in verts or b not in verts:
        raise ValueError("chord endpoints must be distinct polygon vertices")
    ia, ib = verts.index(a), verts.index(b)
    if (ia + 1) % n == ib or (ib + 1) % n == ia:
        return ChordClass.EDGE

    chord = Segment(a, b)
    for i in range(n):
        e = Segment(verts[i], verts[(i + 1) % n])
        rel = segment_intersection(chord, e)
        if a in e.endpoints or b in e.endpoints:
            # Incident edge: sharing the vertex is fine, anything more is not.
            if rel is SegmentRelation.COLLINEAR_OVERLAP:
                return ChordClass.BLOCKED
        elif rel is not SegmentRelation.DISJOINT:
            return ChordClass.BLOCKED

    mid2 = Point(a.x + b.x, a.y + b.y)
    loc = point_in_polygon(mid2, poly.doubled())
    if loc is PointLocation.INSIDE:
        return ChordClass.INTERNAL
    if loc is PointLocation.OUTSIDE:
        return ChordClass.EXTERNAL
    raise AssertionError("unblocked chord midpoint cannot lie on the boundary")


def circumscribes(poly_vertices: Sequence[Point],
                  family: SegmentFamily) -> Certificate | Violation:
    """Decide whether the vertex cycle circumscribes the family.

    All conditions are checked, none assumed: simplicity, exact vertex-set
    equality with the family's endpoints, and an EDGE/INTERNAL classification
    for every family segment.
    """
    verts = tuple(poly_vertices)
    if len(set(verts)) != len(verts):
        dup = next(v for v in verts if verts.count(v) > 1)
        return Violation("repeated vertex", dup)
    if not is_simple_polygon(verts):
        return Violation("not a simple polygon")
    vset = set(verts)
    endpoints = family.endpoint_set()
    if vset != endpoints:
        missing = sorted(endpoints - vset)
        extra = sorted(vset - endpoints)
        return Violation("vertex set differs from family endpoints",
                         {"missing": missing, "extra": extra})

    poly = Polygon(verts, _validate=False)
    classification: dict[Segment, ChordClass] = {}
    for seg in family.segments:
        cls = classify_chord(poly, seg.a, seg.b)
        if cls in (ChordClass.EXTERNAL, ChordClass.BLOCKED):
            return Violation(f"segment is {cls.value}", seg)
        classification[seg] = cls
    return Certificate(poly, classification)


def hull_order_consistent(visit_seq: Sequence[Point], hull: HullSequence,
                          closed: bool) -> bool:
    """Circular-order consistency of a visit sequence with the hull boundary.

    Open sequences must follow the boundary cycle in one fixed direction;
    closed ones may also be consistent with the reversed cycle.  Purely
    combinatorial, so it is usable on partial search paths.
    """
    positions = [hull.position(p) for p in visit_seq]
    if len(set(positions)) != len(positions):
        raise ValueError("visit sequence repeats a point")
    k = len(positions)
    m = len(hull)
    if k <= 2:
        return True

    def gaps(seq: list[int], wrap: bool) -> int:
        pairs = zip(seq, seq[1:] + ([seq[0]] if wrap else []))
        return sum((b - a) % m for a, b in pairs)

    if closed:
        return gaps(positions, True) == m or gaps(positions[::-1], True) == m
    return gaps(positions, False) <= m - 1


def close_path(path: Sequence[Point], frm: Point, to: Point) -> Polygon:
    """Close an open simple polyline with the edge to->frm into a polygon.

    Raises ValueError when the endpoints do not match, the closing edge hits
    the path anywhere besides its endpoints, or the result is degenerate.
    """
    pts = tuple(path)
    if len(pts) < 3:
        raise ValueError("path too short to close")
    if pts[0] != frm or pts[-1] != to:
        raise ValueError("path does not run between the stated endpoints")
    if not is_simple_polygon(pts):
        raise ValueError("closing edge intersects the path or path is degenerate")
    return Polygon(pts)
