"""Built-in seventeen-segment counterexample fixture.

The family is centrally symmetric about the origin, so only half of the
coordinates are stored: the other half is derived by the point reflection
p -> -p.  Mirror partners of the ten right-side endpoints carry the label
prefix ``m_`` (an artifact convention; only 24 endpoints have short names).

The coordinate table itself is pinned by the replay assertion suite
(see circumpoly.replay): any table passing every step is an equally valid
realization of the configuration.
"""

from __future__ import annotations

from .family import LabeledFamily, SegmentFamily, validate_family
from .geometry import Point, Segment

# Top and left hull segments; the bottom and right ones are the reflections
# de = -(ha), fg = -(bc).
_HULL_HALF = {
    "h": (9, 8), "a": (-9, 8),      # ha: top edge
    "b": (-11, 4), "c": (-11, -5),  # bc: left edge
}

# Center gate mn (self-symmetric, n = -m) and the wing pair:
# ij on the left, kl = -(ij) on the right, with k = -i and l = -j.
_CENTER_HALF = {
    "m": (0, 2),
    "i": (-2, 7), "j": (-2, -6),
}

# The five right-side segments; their mirrors get m_-prefixed labels.
_RIGHT_SIDE = {
    ("t", "u"): ((4, 0), (10, 0)),
    ("w", "v"): ((5, -2), (9, -2)),
    ("x", "y"): ((6, -1), (7, -1)),
    ("q", "p"): ((6, 1), (6, 4)),
    ("s", "r"): ((5, 1), (5, 2)),
}

GRID_BOUNDS = (-11, -8, 11, 8)


def _pt(xy: tuple[int, int]) -> Point:
    return Point(*xy)


def build_s2() -> LabeledFamily:
    """The compiled-in 17-segment axis-parallel family, fully labeled."""
    labels: dict[str, Point] = {}
    for name, xy in _HULL_HALF.items():
        labels[name] = _pt(xy)
    labels["e"] = -labels["a"]
    labels["d"] = -labels["h"]
    labels["f"] = -labels["b"]
    labels["g"] = -labels["c"]
    labels["m"] = _pt(_CENTER_HALF["m"])
    labels["n"] = -labels["m"]
    labels["i"] = _pt(_CENTER_HALF["i"])
    labels["j"] = _pt(_CENTER_HALF["j"])
    labels["k"] = -labels["i"]
    labels["l"] = -labels["j"]
    for (n1, n2), (xy1, xy2) in _RIGHT_SIDE.items():
        labels[n1] = _pt(xy1)
        labels[n2] = _pt(xy2)
        labels[f"m_{n1}"] = -labels[n1]
        labels[f"m_{n2}"] = -labels[n2]

    segments = [
        Segment(labels["h"], labels["a"]),
        Segment(labels["b"], labels["c"]),
        Segment(labels["d"], labels["e"]),
        Segment(labels["f"], labels["g"]),
        Segment(labels["m"], labels["n"]),
        Segment(labels["i"], labels["j"]),
        Segment(labels["k"], labels["l"]),
    ]
    for n1, n2 in _RIGHT_SIDE:
        segments.append(Segment(labels[n1], labels[n2]))
        segments.append(Segment(labels[f"m_{n1}"], labels[f"m_{n2}"]))

    family = validate_family(tuple(sorted(segments)), bounds=GRID_BOUNDS)
    return LabeledFamily(family, labels)


def two_parallel_family() -> SegmentFamily:
    """Smallest positive control: two parallel segments, rectangle answer."""
    return validate_family((
        Segment(Point(0, 0), Point(2, 0)),
        Segment(Point(0, 2), Point(2, 2)),
    ))
