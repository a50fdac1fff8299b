"""Face-width against the exhaustive short-cycle search."""

import pytest

from gadc.diagram import Crossing, Diagram, surface_genus
from gadc.errors import NonCellularError
from gadc.facewidth import INFINITE, build_radial_graph, face_width

from oracles import brute_force_face_width


def test_sphere_diagrams_infinite(fx):
    for name in ("trefoil", "figure-eight", "granny", "(2,5)", "hopf"):
        assert face_width(fx[name]) is INFINITE


def test_one_crossing_torus(fx):
    assert face_width(fx["one-crossing-torus"]) == 1


def test_weave(fx):
    assert face_width(fx["weave"]) == 2


def test_radial_graph_edge_count(fx, small_census):
    for d in list(v for v in fx.values() if v.n_crossings) + small_census:
        rg = build_radial_graph(d)
        assert len(rg.edges) == 4 * d.n_crossings


def test_noncellular_rejected(fx):
    d = fx["one-crossing-torus"]
    decorated = Diagram(
        crossings=d.crossings,
        pairing=d.pairing,
        component_of=d.component_of,
        region_genus=((0, 1),),
    )
    with pytest.raises(NonCellularError):
        face_width(decorated)


def test_face_width_positive_on_positive_genus(small_maps):
    for d in small_maps:
        if surface_genus(d) >= 1:
            assert face_width(d) >= 1


def test_oracle_equivalence_small(small_maps):
    for d in small_maps:
        fw = face_width(d)
        brute = brute_force_face_width(d)
        if surface_genus(d) == 0:
            assert fw is INFINITE
            assert brute is None
        else:
            assert fw == brute, d.pairing


def test_marker_invariance(fx, small_maps):
    # face-width depends only on the underlying embedded graph
    for d in list(v for v in fx.values() if v.n_crossings and not v.region_genus)[:5] + small_maps[:20]:
        flipped = Diagram(
            crossings=tuple(Crossing(c.darts, (c.under + 1) % 4) for c in d.crossings),
            pairing=d.pairing,
            component_of=d.component_of,
        )
        a, b = face_width(d), face_width(flipped)
        assert (a is INFINITE and b is INFINITE) or a == b
