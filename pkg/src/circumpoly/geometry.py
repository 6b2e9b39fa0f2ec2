"""Exact integer planar geometry kernel.

Every predicate and construction here works on integer grid coordinates
with integer arithmetic only.  There is no epsilon anywhere: collinearity,
intersection and containment are decided exactly.  Tests that would need a
half-integer midpoint are performed on doubled coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class Orientation(enum.IntEnum):
    """Sign of the cross product (q-p) x (r-p)."""

    CW = -1
    COLLINEAR = 0
    CCW = 1


class SegmentRelation(enum.Enum):
    """How two closed segments meet."""

    DISJOINT = "disjoint"
    TOUCH = "touch"
    PROPER_CROSS = "proper_cross"
    COLLINEAR_OVERLAP = "collinear_overlap"


class PointLocation(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True, order=True)
class Point:
    """Immutable grid point; usable as dict key / set member."""

    x: int
    y: int

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def translated(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, order=True)
class Segment:
    """Closed, nondegenerate segment; unordered (endpoints are canonicalized)."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")
        if self.b < self.a:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return (self.a, self.b)

    def reflected(self) -> "Segment":
        """Image under the point reflection p -> -p."""
        return Segment(-self.a, -self.b)

    def translated(self, dx: int, dy: int) -> "Segment":
        return Segment(self.a.translated(dx, dy), self.b.translated(dx, dy))

    def is_horizontal(self) -> bool:
        return self.a.y == self.b.y

    def is_vertical(self) -> bool:
        return self.a.x == self.b.x

    def is_axis_parallel(self) -> bool:
        return self.is_horizontal() or self.is_vertical()

    def __repr__(self) -> str:
        return f"Segment({self.a}-{self.b})"


def cross(o: Point, a: Point, b: Point) -> int:
    """Cross product (a-o) x (b-o); twice the signed triangle area."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.CCW
    if c < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab (a != b not required)."""
    if cross(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def strictly_between(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies in the relative interior of segment ab."""
    return on_segment(p, a, b) and p != a and p != b


def segment_intersection(s: Segment, t: Segment) -> SegmentRelation:
    """Classify the intersection of two closed segments.

    TOUCH: exactly one common point, an endpoint of at least one segment.
    PROPER_CROSS: one common point interior to both.
    COLLINEAR_OVERLAP: the common set is a segment of positive length.
    """
    a, b, c, d = s.a, s.b, t.a, t.b
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)

    if d1 == 0 and d2 == 0:
        # Collinear lines: compare 1-D intervals along the dominant axis.
        if a.x != b.x:
            key = lambda p: p.x  # noqa: E731
        else:
            key = lambda p: p.y  # noqa: E731
        s_lo, s_hi = sorted((key(a), key(b)))
        t_lo, t_hi = sorted((key(c), key(d)))
        lo, hi = max(s_lo, t_lo), min(s_hi, t_hi)
        if lo > hi:
            return SegmentRelation.DISJOINT
        if lo < hi:
            return SegmentRelation.COLLINEAR_OVERLAP
        return SegmentRelation.TOUCH

    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return SegmentRelation.PROPER_CROSS

    if (on_segment(c, a, b) or on_segment(d, a, b)
            or on_segment(a, c, d) or on_segment(b, c, d)):
        return SegmentRelation.TOUCH
    return SegmentRelation.DISJOINT


def segments_properly_cross(s: Segment, t: Segment) -> bool:
    return segment_intersection(s, t) is SegmentRelation.PROPER_CROSS


def signed_area2(vertices: Sequence[Point]) -> int:
    """Twice the signed area of the closed polygonal chain (CCW positive)."""
    total = 0
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


class HullSequence:
    """Convex hull boundary in CCW order, collinear boundary points included.

    Each entry is a point plus a corner flag: corners are the strictly convex
    extreme points, non-corners lie in the relative interior of a hull edge.
    Axis-parallel instances routinely place endpoints on hull edges, so the
    hull-order predicate must see those points; dropping them would make the
    circular-order prune unsound.
    """

    __slots__ = ("entries", "_pos")

    def __init__(self, entries: Sequence[tuple[Point, bool]]):
        self.entries: tuple[tuple[Point, bool], ...] = tuple(entries)
        self._pos = {p: i for i, (p, _) in enumerate(self.entries)}
        if len(self._pos) != len(self.entries):
            raise ValueError("duplicate points in hull sequence")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def points(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def corners(self) -> tuple[Point, ...]:
        return tuple(p for p, c in self.entries if c)

    def position(self, p: Point) -> int:
        """Index of p in the boundary cycle; ValueError if p is not on it."""
        try:
            return self._pos[p]
        except KeyError:
            raise ValueError(f"{p} is not on the hull boundary") from None

    def contains(self, p: Point) -> bool:
        return p in self._pos

    def adjacent(self, p: Point, q: Point) -> bool:
        """True iff p and q are consecutive in the boundary cycle."""
        n = len(self.entries)
        i, j = self.position(p), self.position(q)
        return (i + 1) % n == j or (j + 1) % n == i

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}{'*' if c else ''}" for p, c in self.entries)
        return f"HullSequence[{inner}]"


def convex_hull(points: Iterable[Point]) -> HullSequence:
    """Convex hull with collinear boundary points retained and flagged.

    Raises ValueError on duplicate input points.  For all-collinear input the
    sequence is the points in line order with the two extremes as corners.
    """
    pts = list(points)
    uniq = sorted(set(pts))
    if len(uniq) != len(pts):
        raise ValueError("duplicate input points")
    if len(uniq) == 1:
        return HullSequence([(uniq[0], True)])
    if all(cross(uniq[0], uniq[-1], p) == 0 for p in uniq):
        entries = [(p, p in (uniq[0], uniq[-1])) for p in uniq]
        return HullSequence(entries)

    # Andrew's monotone chain, strict corners only.
    def chain(seq: list[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(list(reversed(uniq)))
    corners = lower[:-1] + upper[:-1]  # CCW, starting at min point

    corner_set = set(corners)
    m = len(corners)
    entries: list[tuple[Point, bool]] = []
    for i in range(m):
        c0, c1 = corners[i], corners[(i + 1) % m]
        entries.append((c0, True))
        riders = [p for p in uniq
                  if p not in corner_set and strictly_between(p, c0, c1)]
        riders.sort(key=lambda p: (abs(p.x - c0.x), abs(p.y - c0.y)))
        entries.extend((p, False) for p in riders)
    return HullSequence(entries)


def is_simple_polygon(vertices: Sequence[Point]) -> bool:
    """Exact simplicity test for a closed vertex cycle.

    Simple means: >= 3 distinct vertices, adjacent edges share only their
    common vertex, non-adjacent edges are fully disjoint.  Straight-angle
    vertices are allowed; collapsed (zero-area, back-tracking) cycles are not.
    """
    n = len(vertices)
    if n < 3:
        return False
    if len(set(vertices)) != n:
        return False
    edges = [Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rel = segment_intersection(edges[i], edges[j])
            if j == i + 1 or (i == 0 and j == n - 1):
                if rel is not SegmentRelation.TOUCH:
                    return False
            elif rel is not SegmentRelation.DISJOINT:
                return False
    return True


class Polygon:
    """Simple polygon, orientation normalized to CCW at construction.

    The starting vertex of the input sequence is preserved; only the
    traversal direction is normalized.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point], _validate: bool = True):
        verts = tuple(vertices)
        if _validate and not is_simple_polygon(verts):
            raise ValueError("not a simple polygon")
        if signed_area2(verts) < 0:
            verts = (verts[0],) + tuple(reversed(verts[1:]))
        self.vertices = verts

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polygon):
            return NotImplemented
        if len(self) != len(other):
            return False
        n = len(self)
        try:
            k = other.vertices.index(self.vertices[0])
        except ValueError:
            return False
        return all(self.vertices[i] == other.vertices[(k + i) % n]
                   for i in range(n))

    def __hash__(self) -> int:
        k = min(range(len(self.vertices)), key=lambda i: self.vertices[i])
        n = len(self.vertices)
        return hash(tuple(self.vertices[(k + i) % n] for i in range(n)))

    def __repr__(self) -> str:
        return f"Polygon({list(self.vertices)})"

    def edges(self) -> list[Segment]:
        n = len(self.vertices)
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n])
                for i in range(n)]

    def doubled(self) -> "Polygon":
        """The polygon scaled by 2, for exact midpoint tests."""
        p = Polygon.__new__(Polygon)
        p.vertices = tuple(Point(2 * v.x, 2 * v.y) for v in self.vertices)
        return p

    def reflected(self) -> "Polygon":
        p = Polygon.__new__(Polygon)
        verts = tuple(-v for v in self.vertices)
        if signed_area2(verts) < 0:
            verts = (verts[0],) + tuple(reversed(verts[1:]))
        p.vertices = verts
        return p


def point_in_polygon(p: Point, poly: Polygon) -> PointLocation:
    """Exact point location: INSIDE / BOUNDARY / OUTSIDE.

    Boundary includes vertices and edge-interior points.  Interior test is
    an exact integer ray crossing count (half-open edge rule).
    """
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        if on_segment(p, verts[i], verts[(i + 1) % n]):
            return PointLocation.BOUNDARY
    inside = False
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            # Exact side-of-edge test replaces the x-intersection division.
            t = cross(a, b, p)
            if b.y > a.y:
                if t > 0:
                    inside = not inside
            else:
                if t < 0:
                    inside = not inside
    return PointLocation.INSIDE if inside else PointLocation.OUTSIDE
