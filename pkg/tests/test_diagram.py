"""Diagram core: parsing, validation, regions, genus, components, hypotheses."""

import json
import random

import pytest

from gadc.diagram import (
    Crossing,
    Diagram,
    FreeLoop,
    SIDE_L,
    SIDE_R,
    components,
    is_alternating,
    is_reduced,
    make_diagram,
    mirror_diagram,
    parse_diagram,
    region_corners,
    relabel_diagram,
    serialize_diagram,
    surface_genus,
    trace_regions,
    validate_map,
)
from gadc.errors import DiagramSyntaxError, StructureError
from gadc.generator import random_diagram

# the classical 3-crossing code X[1,4,2,5] X[3,6,4,1] X[5,2,6,3], translated
# dart by dart: crossing i carries darts 4i..4i+3 counterclockwise from the
# incoming under-strand dart; edge label k pairs the two slots carrying k
TREFOIL_PD_DOC = json.dumps({
    "crossings": [
        {"darts": [0, 1, 2, 3], "under": 0},
        {"darts": [4, 5, 6, 7], "under": 0},
        {"darts": [8, 9, 10, 11], "under": 0},
    ],
    "pairing": [[0, 7], [1, 6], [2, 9], [3, 8], [4, 11], [5, 10]],
})


def test_parse_trefoil_pd_translation():
    d = parse_diagram(TREFOIL_PD_DOC)
    assert d.n_crossings == 3
    assert d.n_darts == 12
    assert len(d.edges()) == 6
    assert validate_map(d).ok


def test_parse_rejects_three_dart_crossing():
    doc = json.dumps({"crossings": [{"darts": [0, 1, 2], "under": 0}], "pairing": []})
    with pytest.raises(StructureError):
        parse_diagram(doc)


def test_parse_smallest_legal_map():
    doc = json.dumps({
        "crossings": [{"darts": [0, 1, 2, 3], "under": 0}],
        "pairing": [[0, 2], [1, 3]],
    })
    d = parse_diagram(doc)
    assert d.n_crossings == 1
    assert d.n_darts == 4
    assert len(d.edges()) == 2


def test_parse_rejects_double_use_in_pairing():
    doc = json.dumps({
        "crossings": [{"darts": [0, 1, 2, 3], "under": 0}],
        "pairing": [[0, 1], [1, 2]],
    })
    with pytest.raises(StructureError):
        parse_diagram(doc)


def test_parse_rejects_bad_under_index():
    doc = json.dumps({
        "crossings": [{"darts": [0, 1, 2, 3], "under": 5}],
        "pairing": [[0, 2], [1, 3]],
    })
    with pytest.raises(StructureError):
        parse_diagram(doc)


def test_parse_rejects_malformed_json():
    with pytest.raises(DiagramSyntaxError):
        parse_diagram("{not json")
    with pytest.raises(DiagramSyntaxError):
        parse_diagram(json.dumps({"pairing": []}))


def test_validate_fixed_point_violation():
    d = Diagram(
        crossings=(Crossing((0, 1, 2, 3), 0),),
        pairing=((0, 0), (1, 3)),
    )
    report = validate_map(d)
    assert not report.ok
    assert any(v.rule == "fixed-point-free involution" for v in report.violations)


def test_validate_component_constancy():
    d = Diagram(
        crossings=(Crossing((0, 1, 2, 3), 0),),
        pairing=((0, 2), (1, 3)),
        component_of=((0, "a"), (1, "a"), (2, "b"), (3, "a")),
    )
    report = validate_map(d)
    assert not report.ok
    assert any(v.rule == "component-constancy" for v in report.violations)


def test_validate_disconnected_map():
    d = make_diagram(
        [((0, 1, 2, 3), 0), ((4, 5, 6, 7), 0)],
        [(0, 2), (1, 3), (4, 6), (5, 7)],
    )
    report = validate_map(d)
    assert any(v.rule == "connected-map" for v in report.violations)


def test_trefoil_regions(fx):
    d = fx["trefoil"]
    regions = trace_regions(d)
    assert len(regions) == 5
    lengths = sorted(len(w.boundary) for w in regions)
    assert lengths == [4, 4, 4, 6, 6]
    assert sum(len(w.boundary) for w in regions) == 8 * 3
    # every region of the trefoil meets at least two distinct crossings
    for w in regions:
        assert len({c.crossing for c in region_corners(d, w)}) >= 2


def test_one_crossing_torus_single_region(fx):
    d = fx["one-crossing-torus"]
    regions = trace_regions(d)
    assert len(regions) == 1
    assert len(regions[0].boundary) == 8
    assert surface_genus(d) == 1


def test_zero_crossing_circle_two_regions():
    d = Diagram(crossings=(), pairing=(), free_loops=(FreeLoop("k", 0),))
    regions = trace_regions(d)
    assert len(regions) == 2
    assert surface_genus(d) == 0
    assert is_alternating(d) == (True, None)


def test_region_partition_invariant(fx, small_census):
    for d in list(fx.values()) + small_census:
        seen = set()
        total = 0
        for w in trace_regions(d):
            for item in w.boundary:
                assert item not in seen
                seen.add(item)
            total += len(w.boundary)
        assert total == 8 * d.n_crossings


def test_genus_fixtures(fx):
    assert surface_genus(fx["trefoil"]) == 0
    assert surface_genus(fx["figure-eight"]) == 0
    assert surface_genus(fx["weave"]) == 1
    decorated = Diagram(
        crossings=fx["trefoil"].crossings,
        pairing=fx["trefoil"].pairing,
        component_of=fx["trefoil"].component_of,
        region_genus=((0, 1),),
    )
    assert surface_genus(decorated) == 1


def test_euler_identity_census(small_census):
    for d in small_census:
        F = len(trace_regions(d))
        assert F == d.n_crossings + 2 - 2 * surface_genus(d)


def test_components_trefoil(fx):
    comps = components(fx["trefoil"])
    assert len(comps) == 1
    assert len(comps[0].darts) == 12  # 6 edges, traversed once


def test_components_hopf(fx):
    comps = components(fx["hopf"])
    assert len(comps) == 2
    assert all(len(c.darts) == 4 for c in comps)  # 2 edges each


def test_components_free_loops(fx):
    comps = components(fx["split-loops"])
    assert [c.label for c in comps] == ["a", "b"]
    assert all(c.darts == () for c in comps)


def _traverse_from(d, start):
    seq = []
    cur = start
    while True:
        seq.append(cur)
        out = d.strand_partner(cur)
        seq.append(out)
        cur = d.alpha(out)
        if cur == start:
            break
    return tuple(seq)


def test_components_partition_and_reversal(fx, small_census):
    for d in list(fx.values()) + small_census:
        seen = []
        for c in components(d):
            seen.extend(c.darts)
        assert sorted(seen) == sorted(d.darts())
        for c in components(d):
            if not c.darts:
                continue
            # restarting from any dart (either traversal direction) yields
            # the same cyclic sequence up to rotation/reflection
            doubled = c.darts + c.darts
            rev_doubled = tuple(reversed(c.darts)) * 2
            n = len(c.darts)
            for start in (c.darts[1], c.darts[n // 2]):
                seq2 = _traverse_from(d, start)
                assert any(doubled[i:i + n] == seq2 for i in range(n)) or any(
                    rev_doubled[i:i + n] == seq2 for i in range(n)
                )


def test_alternating_trefoil_and_flip(fx):
    d = fx["trefoil"]
    assert is_alternating(d) == (True, None)
    flipped = Diagram(
        crossings=(Crossing(d.crossings[0].darts, (d.crossings[0].under + 1) % 4),)
        + d.crossings[1:],
        pairing=d.pairing,
        component_of=d.component_of,
    )
    ok, witness = is_alternating(flipped)
    assert not ok
    assert witness is not None


def test_alternating_relabel_invariance(fx, small_census):
    rng = random.Random(7)
    for d in list(v for k, v in fx.items() if not v.free_loops and not v.region_genus) + small_census:
        perm = list(range(d.n_darts))
        rng.shuffle(perm)
        # a legal relabeling must respect crossings; permute whole crossings
        # and rotate within each crossing instead of arbitrary shuffles
        rot = [rng.randrange(4) for _ in range(d.n_crossings)]
        mapping = {}
        order = list(range(d.n_crossings))
        rng.shuffle(order)
        for new_c, old_c in enumerate(order):
            darts = d.crossings[old_c].darts
            for j in range(4):
                mapping[darts[(j + rot[old_c]) % 4]] = 4 * new_c + j
        relabeled = relabel_diagram(d, mapping)
        assert is_alternating(relabeled)[0] == is_alternating(d)[0]


def test_reduced_examples(fx):
    assert is_reduced(fx["trefoil"]) == (True, None)
    ok, witness = is_reduced(fx["kinked-trefoil"])
    assert not ok
    # the witness is the monogon created by the curl
    regions = trace_regions(fx["kinked-trefoil"])
    assert len(regions[witness].boundary) == 2
    # a disk region meeting one crossing fails the check...
    assert is_reduced(fx["one-crossing-torus"]) == (False, 0)
    # ...but a genus-decorated region is exempt
    decorated = Diagram(
        crossings=fx["one-crossing-torus"].crossings,
        pairing=fx["one-crossing-torus"].pairing,
        component_of=fx["one-crossing-torus"].component_of,
        region_genus=((0, 1),),
    )
    assert is_reduced(decorated) == (True, None)


def test_serialize_roundtrip(fx, small_census):
    for d in list(fx.values()) + small_census:
        text = serialize_diagram(d)
        again = parse_diagram(text)
        assert serialize_diagram(again) == text


def test_mirror_swaps_passages(fx):
    d = fx["trefoil"]
    m = mirror_diagram(d)
    for x in range(d.n_darts):
        assert d.passage_is_under(x) != m.passage_is_under(x)
    assert is_alternating(m)[0]


def test_random_diagram_euler_fuzz():
    for seed in range(50):
        d = random_diagram(5, seed)
        assert validate_map(d).ok
        F = len(trace_regions(d))
        assert F == d.n_crossings + 2 - 2 * surface_genus(d)
