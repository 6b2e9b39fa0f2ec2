"""Segment-family data model, validation and text serialization.

A family is a set of pairwise disjoint closed segments whose endpoints are
not all collinear.  Disjoint means disjoint as closed sets: touching
endpoints are rejected, so a family of n segments always has 2n distinct
endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .geometry import (
    Point,
    Segment,
    SegmentRelation,
    cross,
    segment_intersection,
)


class FamilyError(ValueError):
    """Base class for family validation failures."""


class DegenerateSegmentError(FamilyError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"segment {index} is degenerate (zero length)")


class PairNotDisjointError(FamilyError):
    def __init__(self, i: int, j: int, kind: SegmentRelation):
        self.i, self.j, self.kind = i, j, kind
        super().__init__(f"segments {i} and {j} are not disjoint ({kind.value})")


class AllCollinearError(FamilyError):
    def __init__(self) -> None:
        super().__init__("all endpoints are collinear")


class ParseError(ValueError):
    """Instance text syntax error with a line/column location."""

    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class SegmentFamily:
    """Validated family; construct through validate_family or parse_family."""

    segments: tuple[Segment, ...]
    bounds: tuple[int, int, int, int] | None = None  # (xmin, ymin, xmax, ymax)

    def __len__(self) -> int:
        return len(self.segments)

    def endpoints(self) -> tuple[Point, ...]:
        out: list[Point] = []
        for seg in self.segments:
            out.extend(seg.endpoints)
        return tuple(out)

    def endpoint_set(self) -> set[Point]:
        return set(self.endpoints())

    def bounding_box(self) -> tuple[int, int, int, int]:
        pts = self.endpoints()
        return (min(p.x for p in pts), min(p.y for p in pts),
                max(p.x for p in pts), max(p.y for p in pts))

    def reflected(self) -> "SegmentFamily":
        return SegmentFamily(tuple(sorted(s.reflected() for s in self.segments)),
                             self.bounds)

    def segment_index(self, seg: Segment) -> int:
        return self.segments.index(seg)


@dataclass(frozen=True)
class LabeledFamily:
    """A family plus a bijection from label names to endpoints."""

    family: SegmentFamily
    labels: Mapping[str, Point] = field(default_factory=dict)

    def point(self, name: str) -> Point:
        try:
            return self.labels[name]
        except KeyError:
            raise KeyError(f"missing label {name!r}") from None

    def points(self, names: Iterable[str]) -> list[Point]:
        return [self.point(n) for n in names]

    def label_of(self, p: Point) -> str | None:
        for name, q in self.labels.items():
            if p == q:
                return name
        return None


def validate_family(segments: Sequence[Segment],
                    bounds: tuple[int, int, int, int] | None = None
                    ) -> SegmentFamily:
    """Validate pairwise disjointness and non-collinearity.

    Raises PairNotDisjointError naming the offending pair, or
    AllCollinearError.  Segment construction already rejects degenerate
    segments; parse_family maps those to DegenerateSegmentError with an index.
    """
    segs = tuple(segments)
    if not segs:
        raise FamilyError("family is empty")
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            rel = segment_intersection(segs[i], segs[j])
            if rel is not SegmentRelation.DISJOINT:
                raise PairNotDisjointError(i, j, rel)
    pts = [p for s in segs for p in s.endpoints]
    a = pts[0]
    b = next((p for p in pts if p != a), None)
    if b is None or all(cross(a, b, p) == 0 for p in pts):
        raise AllCollinearError()
    return SegmentFamily(segs, bounds)


def is_centrally_symmetric(family: SegmentFamily) -> bool:
    """True iff p -> -p maps the segment set onto itself."""
    segs = set(family.segments)
    return {s.reflected() for s in segs} == segs


# --- instance text format ---------------------------------------------------
#
# First non-comment line:  segments <n>
# Then n lines:            <x1> <y1> <x2> <y2>
# Optional section:        labels            then lines  <name> <x> <y>
# '#' starts a comment to end of line; UTF-8, LF line endings.


def _content_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_labeled_family(text: str) -> LabeledFamily:
    """Parse instance text into a labeled family (labels may be empty)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, 1, "empty instance")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "segments":
        raise ParseError(lineno, 1, "expected 'segments <n>' header")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(lineno, len(parts[0]) + 2, "segment count must be an integer")
    if n < 1:
        raise ParseError(lineno, len(parts[0]) + 2, "segment count must be positive")
    if len(lines) < 1 + n:
        raise ParseError(lines[-1][0], 1, f"expected {n} segment lines")

    segments: list[Segment] = []
    for idx in range(n):
        lineno, body = lines[1 + idx]
        fields = body.split()
        if len(fields) != 4:
            raise ParseError(lineno, 1, "expected '<x1> <y1> <x2> <y2>'")
        try:
            x1, y1, x2, y2 = (int(f) for f in fields)
        except ValueError:
            raise ParseError(lineno, 1, "coordinates must be decimal integers")
        if (x1, y1) == (x2, y2):
            raise DegenerateSegmentError(idx)
        segments.append(Segment(Point(x1, y1), Point(x2, y2)))

    labels: dict[str, Point] = {}
    rest = lines[1 + n:]
    if rest:
        lineno, body = rest[0]
        if body != "labels":
            raise ParseError(lineno, 1, "expected 'labels' section or end of file")
        for lineno, body in rest[1:]:
            fields = body.split()
            if len(fields) != 3:
                raise ParseError(lineno, 1, "expected '<name> <x> <y>'")
            name = fields[0]
            try:
                x, y = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(lineno, 1, "label coordinates must be integers")
            if name in labels:
                raise ParseError(lineno, 1, f"duplicate label {name!r}")
            labels[name] = Point(x, y)

    family = validate_family(segments)
    endpoint_set = family.endpoint_set()
    for name, p in labels.items():
        if p not in endpoint_set:
            raise FamilyError(f"label {name!r} at {p} is not a family endpoint")
    return LabeledFamily(family, labels)


def parse_family(text: str) -> SegmentFamily:
    return parse_labeled_family(text).family


def serialize_family(family: SegmentFamily,
                     labels: Mapping[str, Point] | None = None) -> str:
    """Canonical text: segments sorted by (min endpoint, max endpoint).

    parse(serialize(f)) == f, and the output is independent of the input
    segment order.  Labels serialize as a separate optional section sorted
    by name.
    """
    segs = sorted(family.segments)
    out = [f"segments {len(segs)}"]
    out.extend(f"{s.a.x} {s.a.y} {s.b.x} {s.b.y}" for s in segs)
    if labels:
        out.append("labels")
        out.extend(f"{name} {p.x} {p.y}" for name, p in sorted(labels.items()))
    return "\n".join(out) + "\n"


def serialize_labeled_family(lf: LabeledFamily) -> str:
    return serialize_family(lf.family, lf.labels)
