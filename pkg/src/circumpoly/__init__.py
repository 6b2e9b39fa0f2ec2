"""circumpoly: exact-arithmetic circumscribing-polygon toolkit.

Decides whether a family of disjoint planar segments admits a simple
polygon through all segment endpoints in which every segment is an edge or
an internal diagonal, verifies certificates, and mechanically replays the
case analysis showing that the built-in 17-segment axis-parallel family
admits none.
"""

from .family import (
    AllCollinearError,
    DegenerateSegmentError,
    FamilyError,
    LabeledFamily,
    PairNotDisjointError,
    ParseError,
    SegmentFamily,
    is_centrally_symmetric,
    parse_family,
    parse_labeled_family,
    serialize_family,
    serialize_labeled_family,
    validate_family,
)
from .fixtures import build_s2
from .geometry import (
    HullSequence,
    Orientation,
    Point,
    PointLocation,
    Polygon,
    Segment,
    SegmentRelation,
    convex_hull,
    is_simple_polygon,
    orientation,
    point_in_polygon,
    segment_intersection,
)
from .replay import ProofReport, ProofStep, forced_hull_edges, replay_s2
from .solver import (
    SearchStats,
    SolveConfig,
    SolveOutcome,
    Verdict,
    brute_force_solve,
    random_family,
    solve,
)
from .verifier import (
    Certificate,
    ChordClass,
    Violation,
    circumscribes,
    classify_chord,
    close_path,
    hull_order_consistent,
)

__version__ = "0.1.0"

__all__ = [
    "AllCollinearError", "Certificate", "ChordClass", "DegenerateSegmentError",
    "FamilyError", "HullSequence", "LabeledFamily", "Orientation",
    "PairNotDisjointError", "ParseError", "Point", "PointLocation", "Polygon",
    "ProofReport", "ProofStep", "SearchStats", "Segment", "SegmentFamily",
    "SegmentRelation", "SolveConfig", "SolveOutcome", "Verdict", "Violation",
    "brute_force_solve", "build_s2", "circumscribes", "classify_chord",
    "close_path", "convex_hull", "forced_hull_edges", "hull_order_consistent",
    "is_centrally_symmetric", "is_simple_polygon", "orientation",
    "parse_family", "parse_labeled_family", "point_in_polygon",
    "random_family", "replay_s2", "segment_intersection", "serialize_family",
    "serialize_labeled_family", "solve", "validate_family",
]
