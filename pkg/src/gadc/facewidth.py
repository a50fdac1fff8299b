"""Face-width (representativity) of the embedded diagram graph.

The radial graph puts one vertex per region and per crossing, with one
edge per corner appearance; a closed curve meeting the diagram graph in
``k`` points corresponds to a radial cycle of length ``2k``, so the
face-width is half the length of a shortest noncontractible radial
cycle.  Candidate cycles are the fundamental cycles of breadth-first
trees rooted at every radial vertex (sufficient for families satisfying
the 3-path condition); contractibility is decided by cutting the surface
along the cycle and inspecting the Euler characteristics of the sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import SIDE_L, SIDE_R, Diagram, surface_genus, trace_regions
from .errors import NonCellularError


class _Infinite:
    """Sentinel for 'no noncontractible curve exists' (genus-zero surfaces)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinite"


INFINITE = _Infinite()


@dataclass(frozen=True)
class RadialEdge:
    """One corner appearance: region incident to a crossing through a corner.

    ``gap`` is the walk position of the corner (after the arrival item);
    ``corner`` the corner index at the crossing (the position of the
    corner's departure dart in the crossing's rotation).
    """

    region: int
    crossing: int
    gap: int
    corner: int


@dataclass(frozen=True)
class RadialGraph:
    """Bipartite region/crossing incidence graph with corner multiplicity."""

    n_regions: int
    n_crossings: int
    edges: tuple[RadialEdge, ...]


def build_radial_graph(d: Diagram) -> RadialGraph:
    regions = trace_regions(d)
    edges = []
    for walk in regions:
        b = walk.boundary
        for k, (dart, side) in enumerate(b):
            if side != SIDE_R:
                continue
            dep = d.sigma_inv(dart)
            edges.append(RadialEdge(
                region=walk.index,
                crossing=d.crossing_of(dart),
                gap=k,
                corner=d.pos_of(dep),
            ))
    return RadialGraph(len(regions), d.n_crossings, tuple(edges))


# ---------------------------------------------------------------------------
# Cutting along a radial cycle
# ---------------------------------------------------------------------------


def _half_of(corner_in: int, corner_out: int, pos: int) -> int:
    """Which half of a chorded crossing a dart position belongs to.

    The chord runs between corners ``corner_in`` and ``corner_out``;
    half 0 holds positions ``corner_in+1 .. corner_out`` counterclockwise.
    """
    i, j = corner_in, corner_out
    k = (pos - (i + 1)) % 4
    span = (j - (i + 1)) % 4
    return 0 if k <= span else 1


def cut_radial_cycle(d: Diagram, region_visits: dict[int, tuple[int, int]],
                     crossing_visits: dict[int, tuple[int, int]]):
    """Cut the surface along a vertex-simple radial cycle.

    ``region_visits`` maps a region to its two boundary gaps (entry and
    exit corners of the through-arc), ``crossing_visits`` a crossing to
    its two chorded corner indices.  Returns (separating, side chis).
    """
    parent: dict = {}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def union(c1, c2):
        parent.setdefault(c1, c1)
        parent.setdefault(c2, c2)
        parent[find(c1)] = find(c2)

    def add(c):
        parent.setdefault(c, c)

    def crossing_cell(x: int, pos: int):
        if x in crossing_visits:
            ci, cj = crossing_visits[x]
            return ("xh", x, _half_of(ci, cj, pos))
        return ("x", x)

    for x in range(d.n_crossings):
        if x in crossing_visits:
            add(("xh", x, 0))
            add(("xh", x, 1))
        else:
            add(("x", x))
    for edge in d.edges():
        cell = ("e", edge)
        for dart in edge:
            union(cell, crossing_cell(d.crossing_of(dart), d.pos_of(dart)))

    regions = trace_regions(d)
    for walk in regions:
        b = walk.boundary
        n = len(b)
        if walk.index in region_visits:
            g1, g2 = sorted(region_visits[walk.index])
            pieces = (
                ("rp", walk.index, 0, g1, g2),
                ("rp", walk.index, 1, g2, g1),
            )
        else:
            pieces = (("rp", walk.index, 0, None, None),)
        for piece in pieces:
            add(piece)
            _, r, _, ga, gb = piece
            if ga is None:
                indices = range(n)
            else:
                indices = []
                k = (ga + 1) % n
                while True:
                    indices.append(k)
                    if k == gb:
                        break
                    k = (k + 1) % n
            for k in indices:
                dart, side = b[k]
                if side == SIDE_L:
                    a, bb = dart, d.alpha(dart)
                    union(piece, ("e", (a, bb) if a < bb else (bb, a)))
                else:
                    if ga is not None and k in (ga, gb):
                        continue  # the curve passes through this corner
                    dep = d.sigma_inv(dart)
                    union(piece, crossing_cell(d.crossing_of(dart), d.pos_of(dep)))

    comps: dict = {}
    for c in parent:
        comps.setdefault(find(c), []).append(c)
    chis = []
    for members in comps.values():
        x = sum(1 for c in members if c[0] == "x")
        e = sum(1 for c in members if c[0] == "e")
        rp = sum(1 for c in members if c[0] == "rp")
        chis.append(x - e + rp)
    return len(chis) == 2, chis


def _cycle_noncontractible(d: Diagram, cycle_edges: list[RadialEdge]) -> bool:
    """Whether the closed curve of a vertex-simple radial cycle is
    noncontractible; cycles that revisit a corner or gap are not genuine
    transversal curves and report False."""
    region_visits: dict[int, list[int]] = {}
    crossing_visits: dict[int, list[int]] = {}
    for e in cycle_edges:
        region_visits.setdefault(e.region, []).append(e.gap)
        crossing_visits.setdefault(e.crossing, []).append(e.corner)
    for gaps in region_visits.values():
        if len(gaps) != 2 or gaps[0] == gaps[1]:
            return False
    for corners in crossing_visits.values():
        if len(corners) != 2 or corners[0] == corners[1]:
            return False
    separating, chis = cut_radial_cycle(
        d,
        {r: (g[0], g[1]) for r, g in region_visits.items()},
        {x: (c[0], c[1]) for x, c in crossing_visits.items()},
    )
    if not separating:
        return True
    return not any(chi == 1 for chi in chis)


# ---------------------------------------------------------------------------
# Shortest noncontractible cycle search
# ---------------------------------------------------------------------------


def _vertex(v):
    return v


def face_width(d: Diagram):
    """Minimum intersections of a noncontractible curve with the diagram
    graph, or :data:`INFINITE` on the sphere.

    Requires a cellular diagram; raises :class:`NonCellularError` when a
    region carries genus decorations.
    """
    for r, g in d.region_genus:
        if g > 0:
            raise NonCellularError(r, g)
    if surface_genus(d) == 0:
        return INFINITE
    rg = build_radial_graph(d)
    best = None
    adjacency: dict = {}
    for idx, e in enumerate(rg.edges):
        u = ("r", e.region)
        w = ("x", e.crossing)
        adjacency.setdefault(u, []).append((w, idx))
        adjacency.setdefault(w, []).append((u, idx))
    vertices = sorted(adjacency)
    for root in vertices:
        parent: dict = {root: None}
        depth = {root: 0}
        order = [root]
        qi = 0
        tree_edges: set[int] = set()
        while qi < len(order):
            u = order[qi]
            qi += 1
            for w, idx in adjacency[u]:
                if w not in parent:
                    parent[w] = (u, idx)
                    depth[w] = depth[u] + 1
                    tree_edges.add(idx)
                    order.append(w)
        for idx, e in enumerate(rg.edges):
            if idx in tree_edges:
                continue
            u, w = ("r", e.region), ("x", e.crossing)
            if u not in parent or w not in parent:
                continue
            cycle = _fundamental_cycle(rg, parent, depth, u, w, idx)
            if cycle is None:
                continue
            length = len(cycle)
            if best is not None and length >= best:
                continue
            if _cycle_noncontractible(d, cycle):
                best = length
    if best is None:
        # genus >= 1 always admits a noncontractible curve; reaching this
        # point would mean the candidate set missed it
        raise AssertionError("no noncontractible radial cycle found on a positive-genus surface")
    assert best % 2 == 0
    return best // 2


def _fundamental_cycle(rg, parent, depth, u, w, idx):
    """Edge list of the cycle through non-tree edge ``idx``; None when the
    tree paths meet before the root (the cycle would repeat a vertex)."""
    pu, pw = [], []
    uu, ww = u, w
    while depth[uu] > depth[ww]:
        uu, e = parent[uu][0], parent[uu][1]
        pu.append(e)
    while depth[ww] > depth[uu]:
        ww, e = parent[ww][0], parent[ww][1]
        pw.append(e)
    while uu != ww:
        uu, e1 = parent[uu][0], parent[uu][1]
        pu.append(e1)
        ww, e2 = parent[ww][0], parent[ww][1]
        pw.append(e2)
    edges = [rg.edges[i] for i in pu] + [rg.edges[idx]] + [rg.edges[i] for i in pw]
    return edges
