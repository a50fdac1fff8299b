"""Deterministic JSON report fragments shared by analysis and certification."""

from __future__ import annotations

import json
from typing import Any

from .coloring import (
    BLACK,
    WHITE,
    build_spanning_surface,
    checkerboard_coloring,
    select_N,
    boundary_slope,
)
from .diagram import (
    Diagram,
    components,
    diagram_doc,
    is_alternating,
    is_reduced,
    region_corners,
    surface_genus,
    trace_regions,
    validate_map,
)
from .errors import (
    BothOrientableError,
    LinkInputError,
    MultiComponentError,
    NonCellularError,
    NotBipartiteError,
)
from .facewidth import INFINITE, face_width
from .primality import is_prime


def dumps(obj: Any) -> str:
    """The one JSON encoder used for every report; fully deterministic."""
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def hypotheses_fragment(d: Diagram) -> dict:
    alt_ok, alt_witness = is_alternating(d)
    red_ok, red_witness = is_reduced(d)
    prime = is_prime(d)
    return {
        "alternating": {"ok": alt_ok, "witness_dart": alt_witness},
        "reduced": {"ok": red_ok, "witness_region": red_witness},
        "prime": {
            "ok": prime.ok,
            "witness": prime.witness.as_dict() if prime.witness else None,
            "reason": prime.reason,
        },
    }


def _surface_fragment(s) -> dict:
    return {
        "chi": s.chi,
        "orientable": s.orientable,
        "connected": s.connected,
        "boundary": s.boundary_components,
    }


def checkerboard_fragment(d: Diagram) -> dict:
    """The coloring/surface report: colorable flag, both surfaces, the
    selected non-orientable surface, and the two boundary slopes (knots
    only; null otherwise)."""
    out: dict = {"colorable": False, "black": None, "white": None,
                 "N": "none", "slope_black": None, "slope_white": None}
    try:
        coloring = checkerboard_coloring(d)
    except NotBipartiteError as exc:
        out["odd_cycle"] = {"regions": list(exc.regions),
                            "edges": [list(e) for e in exc.edges]}
        return out
    out["colorable"] = True
    black = build_spanning_surface(d, coloring, BLACK)
    white = build_spanning_surface(d, coloring, WHITE)
    out["black"] = _surface_fragment(black)
    out["white"] = _surface_fragment(white)
    n_comp = len(components(d))
    if n_comp == 1:
        try:
            out["N"] = select_N(d, coloring).color
        except BothOrientableError:
            out["N"] = "none"
        try:
            out["slope_black"] = boundary_slope(d, coloring, black)
            out["slope_white"] = boundary_slope(d, coloring, white)
        except LinkInputError:
            pass
    else:
        for color, surf in ((BLACK, black), (WHITE, white)):
            if surf.connected:
                out["N"] = color
                break
    return out


def face_width_fragment(d: Diagram):
    try:
        fw = face_width(d)
    except NonCellularError:
        return "non-cellular"
    return "infinite" if fw is INFINITE else fw


def analyze(d: Diagram) -> dict:
    """Full analysis report of a valid diagram."""
    report = validate_map(d)
    out: dict = {
        "input": diagram_doc(d),
        "valid": report.ok,
    }
    if not report.ok:
        out["violations"] = [
            {"rule": v.rule, "message": v.message, "darts": list(v.darts)}
            for v in report.violations
        ]
        return out
    regions = trace_regions(d)
    out["crossings"] = d.n_crossings
    out["genus"] = surface_genus(d)
    out["regions"] = [
        {
            "index": w.index,
            "length": len(w.boundary),
            "genus": w.genus,
            "crossings": sorted({c.crossing for c in region_corners(d, w)}),
        }
        for w in regions
    ]
    out["components"] = [
        {"label": c.label, "edges": len(c.darts) // 2} for c in components(d)
    ]
    out["hypotheses"] = hypotheses_fragment(d)
    out["checkerboard"] = checkerboard_fragment(d)
    out["face_width"] = face_width_fragment(d)
    if d.free_loops:
        out["extensions"] = ["free loop"]
    return out
