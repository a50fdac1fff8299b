"""Cutting the ambient surface along simple loops, combinatorially.

A two-point loop crosses the diagram at two interior edge points and runs
through two (possibly equal) disk regions.  Cutting splits the pierced
edges into fragments and splices the region walks at the crossing points.
Boundary vertices and boundary arcs of the cut cancel circle by circle,
so each side satisfies

    chi = (#crossings) - (#edge pieces) + (#region pieces).

Doors and chords: every passage of a pierced edge carries one door per
crossing point, located inside the passage's walk segment; the two loop
arcs are chords pairing doors inside their regions.  Chords must not
interleave in the cyclic door order (an interleaved pair cannot be drawn
disjointly in a disk); when the loop pierces one edge twice the relative
order of the two points along the edge is free and is chosen to nest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import SIDE_L, SIDE_R, Diagram, region_of_items, trace_regions

Door = tuple[int, int]  # (point id, passage lead dart)
Point = tuple[int, int]  # edge as a sorted dart pair


@dataclass(frozen=True)
class CutContext:
    """Precomputed walk data shared by all loop classifications of a diagram."""

    walks: tuple[tuple[tuple[int, int], ...], ...]
    item_pos: dict
    passage_region: dict  # lead dart -> region index
    edge_of: dict  # dart -> (a, b) with a < b


def make_cut_context(d: Diagram) -> CutContext:
    walks = tuple(w.boundary for w in trace_regions(d) if w.boundary)
    item_pos = {}
    for r, w in enumerate(walks):
        for i, item in enumerate(w):
            item_pos[item] = (r, i)
    item_region = region_of_items(d)
    passage_region = {x: item_region[(x, SIDE_L)] for x in range(d.n_darts)}
    edge_of = {}
    for a, b in d.edges():
        edge_of[a] = (a, b)
        edge_of[b] = (a, b)
    return CutContext(walks, item_pos, passage_region, edge_of)


@dataclass(frozen=True)
class SideSummary:
    """Cell counts of one component of the cut surface."""

    crossings: int
    edge_pieces: int
    region_pieces: int

    @property
    def chi(self) -> int:
        return self.crossings - self.edge_pieces + self.region_pieces

    @property
    def is_trivial_disk(self) -> bool:
        """A disk whose diagram content is a single crossing-free arc."""
        return self.crossings == 0 and self.chi == 1


@dataclass(frozen=True)
class CutResult:
    separating: bool
    sides: tuple[SideSummary, ...]


class _Cells:
    """Union-find over cut cells."""

    def __init__(self):
        self.parent: dict = {}

    def add(self, cell):
        self.parent.setdefault(cell, cell)

    def find(self, cell):
        p = self.parent
        while p[cell] != cell:
            p[cell] = p[p[cell]]
            cell = p[cell]
        return cell

    def union(self, c1, c2):
        self.add(c1)
        self.add(c2)
        self.parent[self.find(c1)] = self.find(c2)

    def components(self) -> list[list]:
        comps: dict = {}
        for c in self.parent:
            comps.setdefault(self.find(c), []).append(c)
        return list(comps.values())


def _fragment_names(n_points: int, lead_is_min: bool) -> list[str]:
    """Edge fragment names along a passage's traversal direction."""
    names = ["A", "M", "B"] if n_points == 2 else ["A", "B"]
    return names if lead_is_min else names[::-1]


def cut_two_point_loop(d: Diagram, ctx: CutContext,
                       points: tuple[Point, Point],
                       arcs: tuple[tuple[Door, Door], tuple[Door, Door]],
                       lambdas: tuple[float, float]) -> CutResult:
    """Cut along the loop crossing the diagram at ``points`` (the edge each
    point lies on) with region arcs ``arcs``; ``lambdas`` positions the
    points along their edges, measured from the smaller-dart end.

    Raises ValueError when the arcs would have to cross inside a region.
    """
    edges_cut: dict[Point, list[int]] = {}
    for point, edge in enumerate(points):
        edges_cut.setdefault(edge, []).append(point)
    for edge, pts in edges_cut.items():
        pts.sort(key=lambda p: lambdas[p])

    cells = _Cells()
    for x in range(d.n_crossings):
        cells.add(("x", x))

    for edge in d.edges():
        if edge not in edges_cut:
            cells.union(("e", edge, "F"), ("x", d.crossing_of(edge[0])))
            cells.union(("e", edge, "F"), ("x", d.crossing_of(edge[1])))
        else:
            names = _fragment_names(len(edges_cut[edge]), True)
            for name in names:
                cells.add(("e", edge, name))
            cells.union(("e", edge, "A"), ("x", d.crossing_of(edge[0])))
            cells.union(("e", edge, "B"), ("x", d.crossing_of(edge[1])))

    arc_of_door: dict[Door, int] = {}
    for ai, (d1, d2) in enumerate(arcs):
        arc_of_door[d1] = ai
        arc_of_door[d2] = ai

    region_pieces = 0
    for r, walk in enumerate(ctx.walks):
        entries = _expanded_entries(d, ctx, walk, edges_cut, lambdas)
        door_positions = [i for i, e in enumerate(entries) if e[0] == "door"]
        if not door_positions:
            cell = ("r", r, 0)
            cells.add(cell)
            region_pieces += 1
            for entry in entries:
                _attach_entry(d, ctx, cells, cell, entry, edges_cut)
            continue
        k = len(door_positions)
        assert k in (2, 4), f"region {r} carries {k} doors"
        order = [entries[i][1] for i in door_positions]
        if k == 2:
            frag_of_interval = [0, 1]
        else:
            pairing = [arc_of_door[door] for door in order]
            if pairing[0] == pairing[1]:
                frag_of_interval = [0, 2, 1, 2]
            elif pairing[0] == pairing[3]:
                frag_of_interval = [2, 0, 2, 1]
            else:
                raise ValueError("interleaved chords: loop arcs cannot be drawn disjointly")
        n_frags = max(frag_of_interval) + 1
        for f in range(n_frags):
            cells.add(("r", r, f))
        region_pieces += n_frags
        m = len(entries)
        for j, start in enumerate(door_positions):
            end = door_positions[(j + 1) % k]
            cell = ("r", r, frag_of_interval[j])
            i = (start + 1) % m
            while i != end:
                _attach_entry(d, ctx, cells, cell, entries[i], edges_cut)
                i = (i + 1) % m

    comps = cells.components()
    sides = []
    for members in comps:
        x = sum(1 for c in members if c[0] == "x")
        e = sum(1 for c in members if c[0] == "e")
        rr = sum(1 for c in members if c[0] == "r")
        sides.append(SideSummary(x, e, rr))
    sides.sort(key=lambda s: (s.crossings, s.edge_pieces, s.region_pieces))
    return CutResult(separating=len(sides) == 2, sides=tuple(sides))


def _expanded_entries(d, ctx, walk, edges_cut, lambdas):
    """Walk items with door and sub-segment entries spliced into passages.

    A passage of a pierced edge expands to: its L item, sub-segment 0,
    door, sub-segment 1, (door, sub-segment 2,) then the R item.  Doors
    appear in the passage's traversal direction.
    """
    entries = []
    for dart, side in walk:
        entries.append(("item", (dart, side)))
        if side != SIDE_L:
            continue
        edge = ctx.edge_of[dart]
        if edge not in edges_cut:
            continue
        pts = edges_cut[edge]
        lead_is_min = dart == edge[0]
        ordered = pts if lead_is_min else pts[::-1]
        for slot, point in enumerate(ordered):
            entries.append(("sub", edge, slot, lead_is_min))
            entries.append(("door", (point, dart)))
        entries.append(("sub", edge, len(ordered), lead_is_min))
    return entries


def _attach_entry(d, ctx, cells, cell, entry, edges_cut):
    if entry[0] == "item":
        dart, side = entry[1]
        if side == SIDE_R:
            cells.union(cell, ("x", d.crossing_of(dart)))
        else:
            edge = ctx.edge_of[dart]
            if edge not in edges_cut:
                cells.union(cell, ("e", edge, "F"))
    elif entry[0] == "sub":
        _, edge, slot, lead_is_min = entry
        name = _fragment_names(len(edges_cut[edge]), lead_is_min)[slot]
        cells.union(cell, ("e", edge, name))
