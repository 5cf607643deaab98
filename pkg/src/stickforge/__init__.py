"""Stick embeddings of spatial graphs from arc presentations.

Pipeline: an abstract graph plus an arc presentation (graph_core,
arc_presentation) becomes a circular chord diagram (circular_diagram),
which either lifts to an exact rational stick embedding (stick_builder)
or to a floating-point equal-length embedding (equilateral_builder).
Every construction is certified by builder-independent checks (verifier)
and compared against the bound formulas (bounds).
"""

from .arc_presentation import (
    Arc,
    ArcPresentation,
    BindingPoint,
    PresentationError,
    catalog,
    catalog_names,
    split_components,
    validate_presentation,
)
from .bounds import (
    BoundsReport,
    arc_index_upper,
    bounds_report,
    equilateral_upper_from_arc,
    equilateral_upper_main,
    knot_reference_bounds,
    stick_upper_from_arc,
    stick_upper_from_n0,
    stick_upper_main,
)
from .circular_diagram import CircularDiagram, boundary_points, chords_cross, to_circular
from .equilateral_builder import (
    EquilateralEmbedding,
    EquilateralError,
    build_component,
    build_equilateral,
    build_tents,
    isotopy_certificate,
    reduce_top,
)
from .graph_core import (
    AbstractGraph,
    GraphError,
    SpatialParams,
    default_spatial_params,
    validate_graph,
)
from .randgen import GenerationExhausted, random_presentation
from .stick_builder import BuildError, StickEmbedding, build, count_sticks
from .verifier import (
    Tolerances,
    VerificationReport,
    check_crossing_order,
    check_equilateral,
    check_projection,
    check_simplicity,
    verify_stick_embedding,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractGraph",
    "Arc",
    "ArcPresentation",
    "BindingPoint",
    "BoundsReport",
    "BuildError",
    "CircularDiagram",
    "EquilateralEmbedding",
    "EquilateralError",
    "GenerationExhausted",
    "GraphError",
    "PresentationError",
    "SpatialParams",
    "StickEmbedding",
    "Tolerances",
    "VerificationReport",
    "arc_index_upper",
    "boundary_points",
    "bounds_report",
    "build",
    "build_component",
    "build_equilateral",
    "build_tents",
    "catalog",
    "catalog_names",
    "check_crossing_order",
    "check_equilateral",
    "check_projection",
    "check_simplicity",
    "chords_cross",
    "count_sticks",
    "default_spatial_params",
    "equilateral_upper_from_arc",
    "equilateral_upper_main",
    "isotopy_certificate",
    "knot_reference_bounds",
    "random_presentation",
    "reduce_top",
    "split_components",
    "stick_upper_from_arc",
    "stick_upper_from_n0",
    "stick_upper_main",
    "to_circular",
    "validate_graph",
    "validate_presentation",
    "verify_stick_embedding",
]
