"""Exception types shared across the package.

Validation problems found by ``validate_map`` are reported as data, not
exceptions; the classes here cover structurally unusable input and
contract violations between modules.
"""

from __future__ import annotations


class DiagramSyntaxError(ValueError):
    """Input document is not well-formed (bad JSON, missing/ill-typed fields)."""


class StructureError(ValueError):
    """Document is well-formed JSON but violates the dart/pairing schema."""


class ParityError(ArithmeticError):
    """Euler count came out odd; impossible for a valid map, so an internal bug."""


class NonCellularError(ValueError):
    """Operation requires every region to be a disk (region_genus all zero)."""

    def __init__(self, region: int, genus: int):
        super().__init__(f"region {region} has genus {genus}; not an open disk")
        self.region = region
        self.genus = genus


class NotBipartiteError(ValueError):
    """Region adjacency graph has an odd cycle; no checkerboard coloring.

    ``regions`` and ``edges`` record a witness odd cycle.
    """

    def __init__(self, regions: list[int], edges: list[tuple[int, int]]):
        super().__init__(f"region adjacency graph has an odd cycle through {regions}")
        self.regions = regions
        self.edges = edges


class BothOrientableError(ValueError):
    """Neither checkerboard surface is non-orientable (hypotheses must have failed)."""


class NotOrientableError(ValueError):
    """Operation requires an orientable spanning surface."""


class InconsistentError(ValueError):
    """Crossing typing reached with a non-alternating diagram (caller bug)."""


class DisconnectedError(ValueError):
    """Operation requires a connected spanning surface."""


class LinkInputError(ValueError):
    """Operation is defined for knots only and received a multi-component diagram."""


class MultiComponentError(ValueError):
    """Knot certification called on a diagram with more than one component."""


class SingleComponentError(ValueError):
    """Link certification called on a one-component diagram."""


class InternalContradiction(AssertionError):
    """A constructive theorem check failed although the hypotheses held.

    Either the implementation has a bug or the input is a counterexample;
    both must surface loudly instead of producing a certificate.
    """


class CapExceededError(ValueError):
    """Census request exceeds the configured enumeration caps."""
