"""Certificates: verified hypotheses plus conclusions cited from a fixed
statement catalogue.

A conclusion is Certified only when every hypothesis it depends on holds.
Constructive statements are re-verified on the spot; a failure under
satisfied hypotheses raises :class:`InternalContradiction`, because it
means either an implementation bug or a counterexample, and both must
surface loudly.  The remaining statements are certified by citation with
the hypothesis transcript attached.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    BLACK,
    WHITE,
    build_spanning_surface,
    checkerboard_coloring,
    neighborhood_boundary,
    select_N,
)
from .diagram import Diagram, components, diagram_doc, trace_regions
from .errors import (
    BothOrientableError,
    InternalContradiction,
    MultiComponentError,
    NotBipartiteError,
    SingleComponentError,
)
from .report import checkerboard_fragment, face_width_fragment, hypotheses_fragment

CERTIFIED = "certified"
NOT_APPLICABLE = "not-applicable"

KNOT_CATALOGUE = (
    ("T2.2.1", "all complementary regions are open disks", "Theorem 2.2(1)"),
    ("T2.2.2", "the complement admits a checkerboard coloring", "Theorem 2.2(2)"),
    ("T2.2.3", "the knot bounds a non-orientable checkerboard surface N", "Theorem 2.2(3)"),
    ("T2.2.4", "the knot isotopes into the neighborhood boundary of N with connected complement",
     "Theorem 2.2(4)"),
    ("T2.2.5", "r(neighborhood boundary of N, K) >= 2", "Theorem 2.2(5)"),
    ("C2.3", "K is not parallel to any closed surface disjoint from the thickened "
     "ambient surface; in particular K is non-trivial", "Corollary 2.3"),
)

LINK_CATALOGUE = (
    ("T2.4.1", "all complementary regions are open disks", "Theorem 2.4(1)"),
    ("T2.4.2", "the complement admits a checkerboard coloring", "Theorem 2.4(2)"),
    ("T2.4.3", "the link bounds a connected checkerboard surface N", "Theorem 2.4(3)"),
    ("T2.4.4", "the link isotopes into the neighborhood boundary of N", "Theorem 2.4(4)"),
    ("T2.4.5", "r(neighborhood boundary of N, L) >= 2", "Theorem 2.4(5)"),
    ("C2.5", "L is not splittable", "Corollary 2.5"),
)


@dataclass(frozen=True)
class Certificate:
    """Hypothesis transcript plus cited conclusions and embedded reports."""

    hypotheses: dict
    conclusions: tuple[dict, ...]
    data: dict
    notes: tuple[str, ...]
    input_doc: dict

    @property
    def all_hypotheses_hold(self) -> bool:
        return all(h["ok"] for h in self.hypotheses.values())

    def as_dict(self) -> dict:
        return {
            "input": self.input_doc,
            "hypotheses": self.hypotheses,
            "conclusions": list(self.conclusions),
            "data": self.data,
            "notes": list(self.notes),
        }


def _data_fragments(d: Diagram) -> dict:
    regions = trace_regions(d)
    return {
        "regions": [{"index": w.index, "length": len(w.boundary), "genus": w.genus}
                    for w in regions],
        "checkerboard": checkerboard_fragment(d),
        "face_width": face_width_fragment(d),
    }


def _conclusions(catalogue, status: str, extra: dict | None = None) -> tuple[dict, ...]:
    out = []
    for stmt_id, text, cite in catalogue:
        entry = {"id": stmt_id, "statement": text, "status": status, "cite": cite}
        if extra and stmt_id in extra:
            entry.update(extra[stmt_id])
        out.append(entry)
    return tuple(out)


def certify_knot(d: Diagram) -> Certificate:
    """Certificate for a one-component diagram.

    With all hypotheses satisfied the disk-region, coloring, non-orientable
    surface, and connected-complement statements are verified
    constructively; the representativity bound and non-parallelism are
    certified by citation.
    """
    if len(components(d)) != 1:
        raise MultiComponentError("certify_knot requires a one-component diagram")
    hypotheses = hypotheses_fragment(d)
    data = _data_fragments(d)
    notes = (
        "conjectural: see §5 — triviality for the ambient surface itself is not decided here",
        "C2.3 concerns closed surfaces disjoint from the thickened ambient surface",
    )
    passing = all(h["ok"] for h in hypotheses.values())
    if not passing:
        return Certificate(hypotheses, _conclusions(KNOT_CATALOGUE, NOT_APPLICABLE),
                           data, notes, diagram_doc(d))

    extra: dict = {}
    if any(w.genus != 0 for w in trace_regions(d)):
        raise InternalContradiction("hypotheses hold but some region is not a disk")
    try:
        coloring = checkerboard_coloring(d)
    except NotBipartiteError as exc:
        raise InternalContradiction(
            f"hypotheses hold but no checkerboard coloring exists: odd cycle {exc.regions}"
        ) from exc
    try:
        N = select_N(d, coloring)
    except BothOrientableError as exc:
        raise InternalContradiction(
            "hypotheses hold but both checkerboard surfaces are orientable"
        ) from exc
    if not N.connected:
        raise InternalContradiction("hypotheses hold but the chosen surface is disconnected")
    nbd = neighborhood_boundary(N)
    if not nbd.complement_of_K_connected:
        raise InternalContradiction(
            "hypotheses hold but the knot does not have connected complement "
            "in the neighborhood boundary"
        )
    extra["T2.2.3"] = {"surface": N.color}
    extra["T2.2.4"] = {"neighborhood": {"chi_closed": nbd.chi_closed, "genus": nbd.genus}}
    return Certificate(hypotheses, _conclusions(KNOT_CATALOGUE, CERTIFIED, extra),
                       data, notes, diagram_doc(d))


def certify_link(d: Diagram) -> Certificate:
    """Certificate for a diagram with at least two components."""
    if len(components(d)) < 2:
        raise SingleComponentError("certify_link requires at least two components")
    hypotheses = hypotheses_fragment(d)
    data = _data_fragments(d)
    notes = ()
    passing = all(h["ok"] for h in hypotheses.values())
    if not passing:
        return Certificate(hypotheses, _conclusions(LINK_CATALOGUE, NOT_APPLICABLE),
                           data, notes, diagram_doc(d))

    extra: dict = {}
    if any(w.genus != 0 for w in trace_regions(d)):
        raise InternalContradiction("hypotheses hold but some region is not a disk")
    try:
        coloring = checkerboard_coloring(d)
    except NotBipartiteError as exc:
        raise InternalContradiction(
            f"hypotheses hold but no checkerboard coloring exists: odd cycle {exc.regions}"
        ) from exc
    chosen = None
    for color in (BLACK, WHITE):
        surf = build_spanning_surface(d, coloring, color)
        if surf.connected:
            chosen = surf
            break
    if chosen is None:
        raise InternalContradiction(
            "hypotheses hold but neither checkerboard surface is connected"
        )
    nbd = neighborhood_boundary(chosen)
    extra["T2.4.3"] = {"surface": chosen.color, "orientable": chosen.orientable}
    extra["T2.4.4"] = {"neighborhood": {"chi_closed": nbd.chi_closed, "genus": nbd.genus}}
    return Certificate(hypotheses, _conclusions(LINK_CATALOGUE, CERTIFIED, extra),
                       data, notes, diagram_doc(d))


def certify(d: Diagram) -> Certificate:
    """Dispatch on the component count."""
    return certify_knot(d) if len(components(d)) == 1 else certify_link(d)
