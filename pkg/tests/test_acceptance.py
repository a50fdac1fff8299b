"""Acceptance criteria, one test per criterion, exact tolerances.

The sweeps are exhaustive at desk scale: every diagram with at most six
crossings and cellular genus at most one (alternating markers are
constructed directly; diagrams with non-alternating markers satisfy the
hypothesis-gated criteria vacuously), and every underlying map with at
most five crossings for the marker-independent oracles.  Each test prints
one PASS line with the quantities it checked.
"""

import json
import subprocess
import sys

import pytest

from gadc.certify import CERTIFIED, NOT_APPLICABLE, certify, certify_knot, certify_link
from gadc.coloring import (
    BLACK,
    WHITE,
    boundary_slope,
    build_spanning_surface,
    checkerboard_coloring,
    induced_crossing_signs,
    neighborhood_boundary,
    select_N,
)
from gadc.diagram import (
    components,
    is_alternating,
    is_reduced,
    mirror_diagram,
    surface_genus,
    trace_regions,
)
from gadc.errors import InternalContradiction, NotBipartiteError
from gadc.facewidth import INFINITE, face_width
from gadc.generator import CensusSpec, enumerate_diagrams, enumerate_maps, fixtures, random_diagram
from gadc.primality import is_prime

from oracles import brute_force_face_width, brute_force_is_prime, doubled_curve_slope

MAX_C = 6
ORACLE_MAX_C = 5


@pytest.fixture(scope="module")
def alt_census():
    """Every alternating-marked diagram with C <= 6 and genus <= 1."""
    spec = CensusSpec(max_crossings=MAX_C, genus_range=(0, 1),
                      filters=frozenset({"alternating"}))
    return list(enumerate_diagrams(spec))


@pytest.fixture(scope="module")
def maps_c5_g01():
    return list(enumerate_maps(ORACLE_MAX_C, (0, 1)))


@pytest.fixture(scope="module")
def maps_c5_g12():
    return list(enumerate_maps(ORACLE_MAX_C, (1, 2)))


@pytest.fixture(scope="module")
def fx():
    return fixtures()


def _hypotheses_pass(d):
    return is_alternating(d)[0] and is_reduced(d)[0] and is_prime(d).ok


def test_criterion_1_knot_census(alt_census):
    """Theorem 2.2 sweep: constructive conclusions hold for every
    hypothesis-passing knot diagram; zero internal contradictions."""
    knots = [d for d in alt_census if len(components(d)) == 1]
    passing = 0
    for d in knots:
        try:
            cert = certify_knot(d)
        except InternalContradiction as exc:
            pytest.fail(f"InternalContradiction on {d.pairing}: {exc}")
        if not cert.all_hypotheses_hold:
            continue
        passing += 1
        assert all(w.genus == 0 for w in trace_regions(d))
        coloring = checkerboard_coloring(d)
        N = select_N(d, coloring)
        assert not N.orientable
        assert neighborhood_boundary(N).complement_of_K_connected
        assert all(c["status"] == CERTIFIED for c in cert.conclusions)
    print(f"\nPASS criterion 1: {len(knots)} knot diagrams (C<={MAX_C}, genus<=1), "
          f"{passing} hypothesis-passing, 0 contradictions")


def test_criterion_2_link_census(alt_census):
    """Theorem 2.4 sweep: a connected checkerboard surface exists for every
    hypothesis-passing link diagram."""
    links = [d for d in alt_census if len(components(d)) >= 2]
    passing = 0
    for d in links:
        try:
            cert = certify_link(d)
        except InternalContradiction as exc:
            pytest.fail(f"InternalContradiction on {d.pairing}: {exc}")
        if not cert.all_hypotheses_hold:
            continue
        passing += 1
        coloring = checkerboard_coloring(d)
        connected = [c for c in (BLACK, WHITE)
                     if build_spanning_surface(d, coloring, c).connected]
        assert connected, f"no connected checkerboard surface for {d.pairing}"
        assert all(c["status"] == CERTIFIED for c in cert.conclusions)
    print(f"\nPASS criterion 2: {len(links)} link diagrams, "
          f"{passing} hypothesis-passing, connected surface found for each")


def test_criterion_3_euler_identities(alt_census, maps_c5_g01):
    """F = C + 2 - 2g on every census diagram and 1000 fuzz diagrams;
    chi(B) + chi(W) = 2 - 2g - C wherever a coloring exists."""
    checked_chi = 0
    for d in alt_census + maps_c5_g01:
        F = len(trace_regions(d))
        g = surface_genus(d)
        assert F == d.n_crossings + 2 - 2 * g
        try:
            coloring = checkerboard_coloring(d)
        except NotBipartiteError:
            continue
        chi_b = build_spanning_surface(d, coloring, BLACK).chi
        chi_w = build_spanning_surface(d, coloring, WHITE).chi
        assert chi_b + chi_w == 2 - 2 * g - d.n_crossings
        checked_chi += 1
    for seed in range(1000):
        d = random_diagram(5, seed)
        assert len(trace_regions(d)) == d.n_crossings + 2 - 2 * surface_genus(d)
    print(f"\nPASS criterion 3: Euler identities on {len(alt_census) + len(maps_c5_g01)} "
          f"census diagrams ({checked_chi} colorable) and 1000 fuzz diagrams")


def test_criterion_4_sign_constancy(alt_census):
    """Alternating diagrams with an orientable checkerboard surface induce
    constant crossing signs; black and white constants are opposite."""
    constant_checked = 0
    opposite_checked = 0
    for d in alt_census:
        try:
            coloring = checkerboard_coloring(d)
        except NotBipartiteError:
            continue
        signs = {}
        for color in (BLACK, WHITE):
            s = build_spanning_surface(d, coloring, color)
            if not s.orientable:
                continue
            values = induced_crossing_signs(d, coloring, s)
            assert len(set(values)) == 1, (d.pairing, color, values)
            signs[color] = values[0]
            constant_checked += 1
        if len(signs) == 2:
            assert signs[BLACK] == -signs[WHITE], d.pairing
            opposite_checked += 1
    print(f"\nPASS criterion 4: {constant_checked} orientable surfaces with constant signs, "
          f"{opposite_checked} both-orientable diagrams with opposite constants")


def test_criterion_5_trefoil_pipeline(fx):
    """Trefoil fixture: exact region, coloring, surface, neighborhood and
    slope values, slope checked against the doubled-curve oracle."""
    d = fx["trefoil"]
    regions = trace_regions(d)
    assert len(regions) == 5
    coloring = checkerboard_coloring(d)
    sizes = sorted((len(coloring.regions_of(BLACK)), len(coloring.regions_of(WHITE))))
    assert sizes == [2, 3]
    black = build_spanning_surface(d, coloring, BLACK)
    white = build_spanning_surface(d, coloring, WHITE)
    assert {black.chi, white.chi} == {-1, 0}
    assert white.chi == 0 and not white.orientable and white.boundary_components == 1
    N = select_N(d, coloring)
    assert N.color == WHITE
    nbd = neighborhood_boundary(N)
    assert nbd.genus == 1 and nbd.chi_closed == 0 and nbd.complement_of_K_connected
    slope = boundary_slope(d, coloring, N)
    assert abs(slope) == 6
    assert slope == doubled_curve_slope(d, set(N.regions))
    assert boundary_slope(d, coloring, black) == doubled_curve_slope(d, set(black.regions)) == 0
    print(f"\nPASS criterion 5: trefoil pipeline exact (slope N = {slope}, oracle agrees)")


def test_criterion_6_figure_eight(fx):
    """Figure-eight fixture: both surfaces non-orientable with chi = -1,
    slopes {+4, -4} against the oracle."""
    d = fx["figure-eight"]
    coloring = checkerboard_coloring(d)
    slopes = {}
    for color in (BLACK, WHITE):
        s = build_spanning_surface(d, coloring, color)
        assert s.chi == -1
        assert not s.orientable
        slopes[color] = boundary_slope(d, coloring, s)
        assert slopes[color] == doubled_curve_slope(d, set(s.regions))
    assert set(slopes.values()) == {4, -4}
    print(f"\nPASS criterion 6: figure-eight chi=-1 both colors, slopes {sorted(slopes.values())}")


def test_criterion_7_primality_oracle(maps_c5_g01, fx):
    """is_prime agrees with the brute-force two-cut classifier on every
    map with C <= 5, genus <= 1; granny detected with separating witness."""
    for d in maps_c5_g01:
        assert is_prime(d).ok == brute_force_is_prime(d), d.pairing
    verdict = is_prime(fx["granny"])
    assert not verdict.ok and verdict.witness is not None
    assert verdict.witness.cls == "SeparatingNontrivial"
    print(f"\nPASS criterion 7: primality oracle equivalence on {len(maps_c5_g01)} maps; "
          f"granny witness {verdict.witness.cls}")


def test_criterion_8_face_width_oracle(maps_c5_g12, maps_c5_g01):
    """face_width matches the brute-force shortest noncontractible radial
    cycle on genus 1-2 maps with C <= 5; sphere diagrams are infinite."""
    for d in maps_c5_g12:
        fw = face_width(d)
        brute = brute_force_face_width(d)
        assert fw is not INFINITE and fw == brute, d.pairing
    spheres = [d for d in maps_c5_g01 if surface_genus(d) == 0]
    for d in spheres:
        assert face_width(d) is INFINITE
    print(f"\nPASS criterion 8: face-width oracle equivalence on {len(maps_c5_g12)} "
          f"genus-1..2 maps; {len(spheres)} sphere maps infinite")


def test_criterion_9_mirror_antisymmetry(alt_census):
    """Mirroring negates boundary slopes and preserves hypothesis and
    conclusion statuses across the census."""
    slope_pairs = 0
    for d in alt_census:
        m = mirror_diagram(d)
        cert_d = certify(d)
        cert_m = certify(m)
        assert {k: v["ok"] for k, v in cert_d.hypotheses.items()} == \
               {k: v["ok"] for k, v in cert_m.hypotheses.items()}, d.pairing
        assert [c["status"] for c in cert_d.conclusions] == \
               [c["status"] for c in cert_m.conclusions], d.pairing
        if len(components(d)) != 1:
            continue
        try:
            col_d = checkerboard_coloring(d)
            col_m = checkerboard_coloring(m)
        except NotBipartiteError:
            continue
        for color in (BLACK, WHITE):
            s_d = build_spanning_surface(d, col_d, color)
            s_m = build_spanning_surface(m, col_m, color)
            assert boundary_slope(m, col_m, s_m) == -boundary_slope(d, col_d, s_d)
            slope_pairs += 1
    print(f"\nPASS criterion 9: mirror antisymmetry over {len(alt_census)} diagrams, "
          f"{slope_pairs} slope negations verified")


def test_criterion_10_determinism(tmp_path):
    """Two census+certify runs through the CLI are byte-identical."""
    args = [sys.executable, "-m", "gadc.cli", "census",
            "--crossings", "4", "--genus", "1", "--filter", "alternating"]
    run1 = subprocess.run(args, capture_output=True)
    run2 = subprocess.run(args, capture_output=True)
    assert run1.returncode == run2.returncode == 0
    assert run1.stdout == run2.stdout
    lines = run1.stdout.decode().strip().split("\n")
    for line in lines:
        doc = json.loads(line)
        assert set(doc) == {"diagram", "certificate"}
    print(f"\nPASS criterion 10: two census+certify runs byte-identical "
          f"({len(lines)} JSON lines)")
