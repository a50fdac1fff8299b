"""Checkerboard surfaces and certificates for link diagrams on closed
orientable surfaces.

The package decides whether a diagram is reduced, prime, and alternating,
constructs the two checkerboard spanning surfaces with their invariants,
computes the combinatorial face-width of the embedded diagram graph, and
emits certificates whose conclusions cite a fixed statement catalogue,
gated on the mechanically verified hypotheses.
"""

from .diagram import (
    Component,
    Crossing,
    Diagram,
    FreeLoop,
    RegionWalk,
    ValidationReport,
    components,
    is_alternating,
    is_reduced,
    mirror_diagram,
    parse_diagram,
    serialize_diagram,
    surface_genus,
    trace_regions,
    validate_map,
)

__all__ = [
    "Component",
    "Crossing",
    "Diagram",
    "FreeLoop",
    "RegionWalk",
    "ValidationReport",
    "components",
    "is_alternating",
    "is_reduced",
    "mirror_diagram",
    "parse_diagram",
    "serialize_diagram",
    "surface_genus",
    "trace_regions",
    "validate_map",
]
