"""Temporal transitive orientations: recognition, construction, verification and patterns."""

from .implication import (
    CorrelatedTriangle,
    ImplicationDigraph,
    NessSet,
    Strategy,
    build_aug,
    build_imp,
    build_imp_multilabel,
    closure,
    compute_ness,
    compute_ness_reference,
    find_correlated_triangles,
)
from .model import (
    GraphFormatError,
    Orientation,
    TemporalGraph,
    VertexOrder,
    is_proper,
    parse_graph,
    parse_order,
    parse_orientation,
    serialize_graph,
    serialize_order,
    serialize_orientation,
    temporalize,
)
from .patterns import (
    PatternWitness,
    avoids_strict_patterns,
    avoids_tto_pattern,
    order_from_strict_tto,
    order_from_tto,
    orient_by_order,
    strict_orient_by_order,
)
from .recognize import (
    ConstructionError,
    RecognitionReport,
    construct_tto,
    recognize,
    recognize_multilabel,
    recognize_proper,
    sat_atto,
    sat_qtto,
)
from .verify import Kind, Variant, Violation, is_valid, verify

__version__ = "0.1.0"
