"""Checkerboard colorings and the spanning surfaces they generate.

The region adjacency graph has one vertex per region and one edge per
diagram edge (plus one per free loop); a checkerboard coloring is a
proper 2-coloring.  A spanning surface takes the regions of one color as
disks and joins them with one half-twisted band per crossing, attached at
the two opposite corners of that color.

Band geometry in dart terms, used repeatedly below: at a crossing with
darts ``e_0..e_3`` (counterclockwise) the band at corners ``c_j`` and
``c_{j+2}`` has its two free sides running along the strand passages, so
a boundary walk arriving at a banded corner jumps to the strand partner
dart and continues in the reversed walk direction.  Every band reverses
orientation relative to the ambient surface, which makes orientability of
the surface exactly bipartiteness of its region/band multigraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    SIDE_L,
    SIDE_R,
    Diagram,
    components,
    is_alternating,
    region_of_items,
    trace_regions,
)
from .errors import (
    BothOrientableError,
    DisconnectedError,
    InconsistentError,
    LinkInputError,
    MultiComponentError,
    NotBipartiteError,
    NotOrientableError,
)

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Coloring:
    """Region index -> color, for all regions including free-loop regions."""

    color_of: tuple[str, ...]

    def color(self, region: int) -> str:
        return self.color_of[region]

    def regions_of(self, color: str) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.color_of) if c == color)

    def swapped(self) -> "Coloring":
        flip = {BLACK: WHITE, WHITE: BLACK}
        return Coloring(tuple(flip[c] for c in self.color_of))


@dataclass(frozen=True)
class SpanningSurface:
    """One color class of regions plus a half-twisted band at every crossing.

    ``chi`` is the Euler characteristic, ``boundary_components`` the number
    of boundary circles (one per link component for a spanning surface).
    When the surface is non-orientable, ``nonorientable_witness`` holds an
    odd cycle of band crossings; when orientable, ``orientation_classes``
    holds the parity class of each surface region (regions in the same
    class receive the same orientation relative to the ambient surface).
    """

    color: str
    regions: tuple[int, ...]
    bands: tuple[int, ...]
    chi: int
    orientable: bool
    connected: bool
    boundary_components: int
    nonorientable_witness: tuple[int, ...] | None
    orientation_classes: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class NeighborhoodBoundary:
    """Boundary data of a regular neighborhood of a spanning surface."""

    chi_closed: int
    genus: int
    complement_of_K_connected: bool


def _adjacency_edges(d: Diagram) -> list[tuple[int, int, object]]:
    """Region adjacency edges: one per diagram edge, one per free loop.

    Returns (region, region, tag) triples, where the tag names the diagram
    edge or the free loop producing the adjacency.
    """
    item_region = region_of_items(d)
    out: list[tuple[int, int, object]] = []
    for a, b in d.edges():
        out.append((item_region[(a, SIDE_L)], item_region[(b, SIDE_L)], (a, b)))
    base = len(set(item_region.values())) if d.n_crossings else 1
    for i, fl in enumerate(d.free_loops):
        out.append((fl.region, base + i, f"loop:{fl.label}"))
    return out


def checkerboard_coloring(d: Diagram) -> Coloring:
    """2-color the regions by breadth-first propagation from region 0 = black.

    Raises :class:`NotBipartiteError` carrying an odd-cycle witness of
    regions and adjacency edges when no checkerboard coloring exists.
    """
    n_regions = len(trace_regions(d))
    adj: dict[int, list[tuple[int, object]]] = {i: [] for i in range(n_regions)}
    for r1, r2, tag in _adjacency_edges(d):
        if r1 == r2:
            raise NotBipartiteError([r1], [tag if isinstance(tag, tuple) else (r1, r1)])
        adj[r1].append((r2, tag))
        adj[r2].append((r1, tag))

    color: dict[int, int] = {}
    parent: dict[int, tuple[int, object] | None] = {}
    for start in range(n_regions):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = [start]
        while queue:
            r = queue.pop(0)
            for s, tag in adj[r]:
                if s not in color:
                    color[s] = 1 - color[r]
                    parent[s] = (r, tag)
                    queue.append(s)
                elif color[s] == color[r]:
                    raise NotBipartiteError(*_odd_cycle(parent, r, s, tag))
    return Coloring(tuple(BLACK if color[i] == 0 else WHITE for i in range(n_regions)))


def _odd_cycle(parent, r, s, tag):
    """Reconstruct the odd region cycle witnessing the coloring conflict."""
    path_r, path_s = [r], [s]
    anc_r = {r}
    node = r
    while parent[node] is not None:
        node = parent[node][0]
        path_r.append(node)
        anc_r.add(node)
    node = s
    while node not in anc_r:
        node = parent[node][0]
        path_s.append(node)
    meet = path_s[-1]
    path_r = path_r[: path_r.index(meet) + 1]
    regions = path_r[::-1] + path_s[:-1][::-1]
    edges = [tag if isinstance(tag, tuple) else (r, s)]
    return regions, edges


def _corner_region(d: Diagram, item_region: dict, crossing: int, j: int) -> int:
    """Region at corner ``c_j`` of a crossing (between darts ``e_j`` and ``e_{j+1}``)."""
    dart = d.crossings[crossing].darts[j]
    return item_region[(dart, SIDE_L)]


def crossing_types(d: Diagram, coloring: Coloring) -> tuple[str, ...]:
    """Classify each crossing as type "B" or "W".

    The type is the color of the two corners swept when the over-strand is
    rotated counterclockwise onto the under-strand; for an alternating
    colorable diagram every crossing receives the same type.  Raises
    :class:`InconsistentError` when called on a non-alternating diagram.
    """
    ok, witness = is_alternating(d)
    if not ok:
        raise InconsistentError(f"diagram is not alternating (witness dart {witness})")
    item_region = region_of_items(d)
    out = []
    for x, c in enumerate(d.crossings):
        swept = _corner_region(d, item_region, x, (c.under + 1) % 4)
        out.append("B" if coloring.color(swept) == BLACK else "W")
    return tuple(out)


def _band_attachments(d: Diagram, coloring: Coloring, color: str,
                      item_region: dict) -> list[tuple[int, int, int]]:
    """Per crossing: (corner position j, region at c_j, region at c_{j+2})
    for the corner pair of the requested color."""
    out = []
    for x in range(d.n_crossings):
        regions = [_corner_region(d, item_region, x, j) for j in range(4)]
        j = 0 if coloring.color(regions[0]) == color else 1
        if coloring.color(regions[j]) != color or coloring.color(regions[j + 2]) != color:
            raise InconsistentError(f"coloring does not alternate around crossing {x}")
        out.append((j, regions[j], regions[j + 2]))
    return out


def build_spanning_surface(d: Diagram, coloring: Coloring, color: str) -> SpanningSurface:
    """Assemble the spanning surface of one color class.

    Orientability is decided by parity propagation over the region/band
    multigraph (each band flips), connectivity by union-find over banded
    regions, and boundary circles by tracing walk items through the band
    jumps; each free loop contributes one further boundary circle.
    """
    item_region = region_of_items(d)
    all_regions = trace_regions(d)
    surf_regions = tuple(coloring.regions_of(color))
    region_set = set(surf_regions)
    bands = _band_attachments(d, coloring, color, item_region)

    hosted: dict[int, int] = {}
    for fl in d.free_loops:
        hosted[fl.region] = hosted.get(fl.region, 0) + 1
    chi = 0
    for r in surf_regions:
        base_chi = 2 if (d.n_crossings == 0 and r == 0) else 1
        chi += base_chi - 2 * all_regions[r].genus - hosted.get(r, 0)
    chi -= d.n_crossings

    parent = {r: r for r in surf_regions}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for _, r1, r2 in bands:
        parent[find(r1)] = find(r2)
    connected = len({find(r) for r in surf_regions}) <= 1

    orientable, witness, classes = _orientation_parity(surf_regions, bands)

    boundary = _count_boundary_circles(d, item_region, region_set) + len(d.free_loops)

    return SpanningSurface(
        color=color,
        regions=surf_regions,
        bands=tuple(range(d.n_crossings)),
        chi=chi,
        orientable=orientable,
        connected=connected,
        boundary_components=boundary,
        nonorientable_witness=witness,
        orientation_classes=tuple(sorted(classes.items())) if orientable else None,
    )


def _orientation_parity(surf_regions, bands):
    """2-color the region/band multigraph where every band is an odd edge.

    Returns (orientable, odd-cycle witness of crossings or None, classes).
    """
    adj: dict[int, list[tuple[int, int]]] = {r: [] for r in surf_regions}
    for x, (_, r1, r2) in enumerate(bands):
        if r1 == r2:
            return False, (x,), {}
        adj[r1].append((r2, x))
        adj[r2].append((r1, x))
    classes: dict[int, int] = {}
    parent: dict[int, tuple[int, int] | None] = {}
    for start in surf_regions:
        if start in classes:
            continue
        classes[start] = 0
        parent[start] = None
        queue = [start]
        while queue:
            r = queue.pop(0)
            for s, x in adj[r]:
                if s not in classes:
                    classes[s] = 1 - classes[r]
                    parent[s] = (r, x)
                    queue.append(s)
                elif classes[s] == classes[r]:
                    cyc = [x]
                    path_r, path_s = {r: None}, []
                    node = r
                    while parent[node] is not None:
                        node, px = parent[node][0], parent[node][1]
                        path_r[node] = px
                    node = s
                    while node not in path_r:
                        cyc.append(parent[node][1])
                        node = parent[node][0]
                    meet = node
                    node = r
                    while node != meet:
                        cyc.append(parent[node][1])
                        node = parent[node][0]
                    return False, tuple(cyc), {}
    return True, None, classes


def _count_boundary_circles(d: Diagram, item_region: dict, region_set: set[int]) -> int:
    """Count boundary circles of the banded surface by orbit tracing.

    States are (dart, side, direction); each boundary circle is traversed
    once in each direction, so the circle count is half the orbit count.
    """
    items = [(x, s) for (x, s), r in item_region.items() if r in region_set]
    states = {(x, s, dr) for x, s in items for dr in (+1, -1)}
    count = 0
    while states:
        state = min(states)
        count += 1
        cur = state
        while True:
            states.discard(cur)
            x, s, dr = cur
            if s == SIDE_L and dr == +1:
                cur = (d.alpha(x), SIDE_R, +1)
            elif s == SIDE_R and dr == -1:
                cur = (d.alpha(x), SIDE_L, -1)
            elif s == SIDE_R and dr == +1:
                cur = (d.strand_partner(x), SIDE_R, -1)
            else:  # SIDE_L, dir -1
                cur = (d.strand_partner(x), SIDE_L, +1)
            if cur == state:
                break
    assert count % 2 == 0, "boundary orbits must pair up by direction"
    return count // 2


def select_N(d: Diagram, coloring: Coloring) -> SpanningSurface:
    """Choose a non-orientable checkerboard surface for a knot diagram,
    black first.  Raises :class:`BothOrientableError` when both surfaces
    are orientable (possible only when the hypotheses fail)."""
    comps = components(d)
    if len(comps) != 1:
        raise MultiComponentError(f"expected a knot diagram, found {len(comps)} components")
    for color in (BLACK, WHITE):
        surf = build_spanning_surface(d, coloring, color)
        if not surf.orientable:
            return surf
    raise BothOrientableError("both checkerboard surfaces are orientable")


def _oriented_edge_directions(d: Diagram, coloring: Coloring, s: SpanningSurface,
                              orientation: dict[int, int]) -> dict[int, bool]:
    """Directions induced on the link by an orientation of the surface.

    Returns per dart whether the strand leaves its crossing through it
    ("outgoing").  The surface boundary orientation directs each edge
    toward the side of its surface-colored region.
    """
    item_region = region_of_items(d)
    region_set = set(s.regions)
    outgoing: dict[int, bool] = {}
    for a, b in d.edges():
        ra = item_region[(a, SIDE_L)]
        lead = a if ra in region_set else b
        r = item_region[(lead, SIDE_L)]
        if orientation[r] == +1:
            outgoing[lead] = True
            outgoing[d.alpha(lead)] = False
        else:
            outgoing[lead] = False
            outgoing[d.alpha(lead)] = True
    return outgoing


def induced_crossing_signs(d: Diagram, coloring: Coloring, s: SpanningSurface,
                           orientation: dict[int, int] | None = None) -> tuple[int, ...]:
    """Signs of the crossings under the link orientation induced by
    orienting the surface ``s``.

    ``orientation`` maps each surface region to +1 or -1 relative to the
    ambient surface and must flip across every band; when omitted, the
    parity class of the smallest region is oriented +1.  Signs do not
    depend on that choice.  Raises :class:`NotOrientableError` for
    non-orientable surfaces.
    """
    if not s.orientable:
        raise NotOrientableError(f"the {s.color} surface is not orientable")
    classes = dict(s.orientation_classes or ())
    if orientation is None:
        orientation = {r: +1 if cls == 0 else -1 for r, cls in classes.items()}
    else:
        for r1 in s.regions:
            if orientation.get(r1) not in (+1, -1):
                raise ValueError(f"orientation missing for region {r1}")
        for r1 in s.regions:
            for r2 in s.regions:
                if classes.get(r1) == classes.get(r2) and orientation[r1] != orientation[r2]:
                    raise ValueError("orientation assignment is inconsistent with the bands")

    outgoing = _oriented_edge_directions(d, coloring, s, orientation)
    signs = []
    for c in d.crossings:
        out_positions = [j for j, dart in enumerate(c.darts) if outgoing[dart]]
        if len(out_positions) != 2 or (out_positions[0] - out_positions[1]) % 2 == 0:
            raise InconsistentError("induced directions do not orient the link")
        p_under = next(j for j in out_positions if (j - c.under) % 2 == 0)
        p_over = next(j for j in out_positions if (j - c.under) % 2 == 1)
        signs.append(+1 if (p_under - p_over) % 4 == 1 else -1)
    return tuple(signs)


def neighborhood_boundary(s: SpanningSurface) -> NeighborhoodBoundary:
    """Invariants of the boundary of a regular neighborhood of ``s``.

    The boundary doubles the Euler characteristic; the complement of the
    link inside it is connected exactly when the surface is one-sided.
    """
    if not s.connected:
        raise DisconnectedError(f"the {s.color} surface is disconnected")
    return NeighborhoodBoundary(
        chi_closed=2 * s.chi,
        genus=1 - s.chi,
        complement_of_K_connected=not s.orientable,
    )


def _knot_crossing_signs(d: Diagram) -> tuple[int, ...]:
    """Crossing signs of a knot under its traversal orientation (choice-free)."""
    comps = [c for c in components(d) if c.darts]
    if len(components(d)) != 1 or not comps:
        raise LinkInputError("crossing signs from traversal are defined for knots only")
    outgoing = {dart: bool(i % 2) for i, dart in enumerate(comps[0].darts)}
    signs = []
    for c in d.crossings:
        out_positions = [j for j, dart in enumerate(c.darts) if outgoing[dart]]
        p_under = next(j for j in out_positions if (j - c.under) % 2 == 0)
        p_over = next(j for j in out_positions if (j - c.under) % 2 == 1)
        signs.append(+1 if (p_under - p_over) % 4 == 1 else -1)
    return tuple(signs)


def boundary_slope(d: Diagram, coloring: Coloring, s: SpanningSurface) -> int:
    """Integral boundary slope of a spanning surface of a knot.

    Computed as the linking number of the knot with its pushoff inside the
    surface: doubling the knot through the regions and bands produces, at
    each crossing, two parallel-copy crossings worth the crossing sign and
    two band-twist crossings worth the twist handedness, which is +1 when
    the band occupies the corners swept from the over-strand
    counterclockwise onto the under-strand and -1 otherwise.
    """
    if len(components(d)) != 1:
        raise LinkInputError("boundary slope is defined for knot diagrams only")
    eps = _knot_crossing_signs(d)
    item_region = region_of_items(d)
    region_set = set(s.regions)
    slope = 0
    for x, c in enumerate(d.crossings):
        swept_region = _corner_region(d, item_region, x, (c.under + 1) % 4)
        twist = +1 if swept_region in region_set else -1
        slope += eps[x] + twist
    return slope
