"""Link diagrams on closed orientable surfaces as decorated combinatorial maps.

A diagram with ``C`` crossings lives on the dart set ``0..4C-1``: each
crossing owns four darts listed in counterclockwise cyclic order as seen
from the positive side of the surface, and a fixed-point-free involution
pairs darts into edges.  The ambient surface is the cellular surface of
this rotation system, plus optional handles declared per region through
``region_genus``.  Closed components that pass through no crossing cannot
be carried by darts and are stored as explicit free-loop records.

Conventions used throughout the package:

* ``sigma`` maps a dart to its counterclockwise successor at the same
  crossing; ``alpha`` is the edge involution.
* Each dart has two sides, ``SIDE_L`` and ``SIDE_R``, the left and right
  side when walking outward along the dart (away from its crossing).
  Region boundaries are traced with the region on the left, so the
  successor of ``(d, L)`` is ``(alpha(d), R)`` and the successor of
  ``(x, R)`` is ``(sigma_inv(x), L)``.  Every (dart, side) item belongs
  to exactly one region walk and each walk has even length.
* At a crossing whose darts are ``e_0..e_3``, the strand entering at
  position ``i`` leaves at position ``i + 2 (mod 4)``.  The ``under``
  index marks the incoming under-strand dart; a passage is an
  under-passage iff its arrival position has the same parity as ``under``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterator, NamedTuple

from .errors import DiagramSyntaxError, ParityError, StructureError

SIDE_L = 0
SIDE_R = 1

Item = tuple[int, int]  # (dart, side)


@dataclass(frozen=True)
class Crossing:
    """Four darts in counterclockwise order plus the incoming under-strand index."""

    darts: tuple[int, int, int, int]
    under: int


@dataclass(frozen=True)
class FreeLoop:
    """A closed crossing-free component, drawn inside a host region."""

    label: str
    region: int


@dataclass(frozen=True)
class Diagram:
    """Immutable decorated combinatorial map.

    ``pairing`` holds unordered dart pairs, ``component_of`` a label per
    dart, ``region_genus`` the non-zero handle decorations keyed by region
    index (in ``trace_regions`` order).  Construction tolerates invalid
    data so that ``validate_map`` can report every violation.
    """

    crossings: tuple[Crossing, ...]
    pairing: tuple[tuple[int, int], ...]
    component_of: tuple[tuple[int, str], ...] = ()
    region_genus: tuple[tuple[int, int], ...] = ()
    free_loops: tuple[FreeLoop, ...] = ()

    def __post_init__(self):
        alpha: dict[int, int] = {}
        for a, b in self.pairing:
            alpha[a] = b
            alpha[b] = a
        crossing_of: dict[int, int] = {}
        pos_of: dict[int, int] = {}
        sigma: dict[int, int] = {}
        sigma_inv: dict[int, int] = {}
        for ci, c in enumerate(self.crossings):
            for j, dart in enumerate(c.darts):
                crossing_of[dart] = ci
                pos_of[dart] = j
                sigma[dart] = c.darts[(j + 1) % 4]
                sigma_inv[dart] = c.darts[(j - 1) % 4]
        object.__setattr__(self, "_alpha", alpha)
        object.__setattr__(self, "_crossing_of", crossing_of)
        object.__setattr__(self, "_pos_of", pos_of)
        object.__setattr__(self, "_sigma", sigma)
        object.__setattr__(self, "_sigma_inv", sigma_inv)
        object.__setattr__(self, "_labels", dict(self.component_of))
        object.__setattr__(self, "_genus_map", dict(self.region_genus))

    # -- basic accessors -------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_darts(self) -> int:
        return 4 * len(self.crossings)

    def darts(self) -> Iterator[int]:
        for c in self.crossings:
            yield from c.darts

    def alpha(self, d: int) -> int:
        return self._alpha[d]

    def sigma(self, d: int) -> int:
        return self._sigma[d]

    def sigma_inv(self, d: int) -> int:
        return self._sigma_inv[d]

    def crossing_of(self, d: int) -> int:
        return self._crossing_of[d]

    def pos_of(self, d: int) -> int:
        return self._pos_of[d]

    def strand_partner(self, d: int) -> int:
        """The dart through which a strand entering at ``d`` leaves its crossing."""
        c = self.crossings[self._crossing_of[d]]
        return c.darts[(self._pos_of[d] + 2) % 4]

    def passage_is_under(self, d: int) -> bool:
        """Whether the strand passage through dart ``d`` is the under-passage."""
        c = self.crossings[self._crossing_of[d]]
        return (self._pos_of[d] - c.under) % 2 == 0

    def label_of(self, d: int) -> str:
        return self._labels.get(d, "")

    def genus_of_region(self, index: int) -> int:
        return self._genus_map.get(index, 0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted dart pairs, in ascending order."""
        return sorted((a, b) if a < b else (b, a) for a, b in self.pairing)


@dataclass(frozen=True)
class RegionWalk:
    """One region of the complement: its cyclic boundary walk of (dart, side) items.

    Free-loop regions (and the base region of a zero-crossing diagram)
    carry an empty boundary.  ``genus`` counts handles hidden inside the
    region; a region is an open disk iff ``genus == 0``.
    """

    index: int
    boundary: tuple[Item, ...]
    genus: int


class Corner(NamedTuple):
    """A corner of a region walk at a crossing, between two rotation-adjacent darts."""

    crossing: int
    depart: int
    arrive: int


class Violation(NamedTuple):
    rule: str
    message: str
    darts: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


class Component(NamedTuple):
    """A strand component: its label and cyclic dart sequence (empty for free loops)."""

    label: str
    darts: tuple[int, ...]


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DiagramSyntaxError(msg)


def parse_diagram(text: str) -> Diagram:
    """Parse an extended-PD JSON document into a :class:`Diagram`.

    Raises :class:`DiagramSyntaxError` for malformed documents and
    :class:`StructureError` when the dart/pairing structure is unusable
    (a dart paired twice, a crossing without exactly four darts, an
    under index outside ``0..3``, dart ids not exactly ``0..4C-1``).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramSyntaxError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "top-level value must be an object")
    _require("crossings" in doc, "missing required key 'crossings'")
    _require("pairing" in doc, "missing required key 'pairing'")
    raw_crossings = doc["crossings"]
    raw_pairing = doc["pairing"]
    _require(isinstance(raw_crossings, list), "'crossings' must be an array")
    _require(isinstance(raw_pairing, list), "'pairing' must be an array")

    crossings = []
    for k, rc in enumerate(raw_crossings):
        _require(isinstance(rc, dict), f"crossing {k} must be an object")
        _require("darts" in rc and "under" in rc, f"crossing {k} needs 'darts' and 'under'")
        darts = rc["darts"]
        under = rc["under"]
        _require(isinstance(darts, list) and all(isinstance(x, int) for x in darts),
                 f"crossing {k}: 'darts' must be an array of integers")
        if len(darts) != 4 or len(set(darts)) != 4:
            raise StructureError(f"crossing {k} must list exactly 4 distinct darts, got {darts}")
        if not isinstance(under, int) or not 0 <= under <= 3:
            raise StructureError(f"crossing {k}: under index {under!r} outside 0-3")
        crossings.append(Crossing(tuple(darts), under))

    n_darts = 4 * len(crossings)
    dart_set = set()
    for c in crossings:
        dart_set.update(c.darts)
    if len(dart_set) != n_darts or (crossings and dart_set != set(range(n_darts))):
        raise StructureError(f"dart ids must be exactly 0..{n_darts - 1}")

    seen: set[int] = set()
    pairing = []
    for k, pr in enumerate(raw_pairing):
        _require(isinstance(pr, list) and len(pr) == 2 and all(isinstance(x, int) for x in pr),
                 f"pairing entry {k} must be a pair of integers")
        a, b = pr
        if a == b:
            raise StructureError(f"pairing entry {k} pairs dart {a} with itself")
        if a in seen or b in seen:
            raise StructureError(f"pairing entry {k} reuses an already paired dart")
        if a not in dart_set or b not in dart_set:
            raise StructureError(f"pairing entry {k} references unknown darts {pr}")
        seen.update((a, b))
        pairing.append((a, b) if a < b else (b, a))
    if len(seen) != n_darts:
        raise StructureError("pairing must cover every dart exactly once")

    explicit: dict[int, str] = {}
    raw_components = doc.get("components", {})
    _require(isinstance(raw_components, dict), "'components' must be an object")
    for key, label in raw_components.items():
        try:
            dart = int(key)
        except ValueError:
            raise DiagramSyntaxError(f"component key {key!r} is not a dart id")
        _require(isinstance(label, str), f"component label for dart {key} must be a string")
        if dart not in dart_set:
            raise StructureError(f"component entry references unknown dart {dart}")
        explicit[dart] = label

    free_loops = []
    raw_loops = doc.get("free_loops", [])
    _require(isinstance(raw_loops, list), "'free_loops' must be an array")
    for k, rl in enumerate(raw_loops):
        _require(isinstance(rl, dict) and "label" in rl and "region" in rl,
                 f"free loop {k} needs 'label' and 'region'")
        _require(isinstance(rl["label"], str) and isinstance(rl["region"], int),
                 f"free loop {k}: label must be a string and region an integer")
        free_loops.append(FreeLoop(rl["label"], rl["region"]))

    region_genus = []
    raw_genus = doc.get("region_genus", {})
    _require(isinstance(raw_genus, dict), "'region_genus' must be an object")
    for key, g in sorted(raw_genus.items(), key=lambda kv: int(kv[0])):
        try:
            idx = int(key)
        except ValueError:
            raise DiagramSyntaxError(f"region_genus key {key!r} is not a region index")
        _require(isinstance(g, int), f"region_genus[{key}] must be an integer")
        if g < 0:
            raise StructureError(f"region_genus[{key}] is negative")
        if g > 0:
            region_genus.append((idx, g))

    labels = _propagate_labels(crossings, pairing, explicit)
    return Diagram(
        crossings=tuple(crossings),
        pairing=tuple(sorted(pairing)),
        component_of=tuple(sorted(labels.items())),
        region_genus=tuple(region_genus),
        free_loops=tuple(free_loops),
    )


def _propagate_labels(crossings, pairing, explicit: dict[int, str]) -> dict[int, str]:
    """Spread explicit component labels along strands; auto-label the rest.

    Darts carrying an explicit label keep it even when it conflicts with
    the rest of the strand, so that validate_map can report the conflict.
    """
    probe = Diagram(tuple(crossings), tuple(pairing))
    labels: dict[int, str] = {}
    auto = 0
    for seq in _dart_component_cycles(probe):
        chosen = None
        for d in seq:
            if d in explicit:
                chosen = explicit[d]
                break
        if chosen is None:
            while str(auto) in explicit.values():
                auto += 1
            chosen = str(auto)
            auto += 1
        for d in seq:
            labels[d] = explicit.get(d, chosen)
    return labels


def diagram_doc(d: Diagram) -> dict:
    """Canonical extended-PD document of a diagram, as a plain dict.

    Each crossing's dart list is rotated so its smallest dart comes first,
    crossings are sorted by that dart, and pairing pairs are sorted; one
    component label is emitted per strand component, keyed by its smallest
    dart.
    """
    crossings_doc = []
    for c in sorted(d.crossings, key=lambda c: min(c.darts)):
        shift = c.darts.index(min(c.darts))
        darts = tuple(c.darts[(shift + j) % 4] for j in range(4))
        under = (c.under - shift) % 4
        crossings_doc.append({"darts": list(darts), "under": under})
    doc: dict[str, Any] = {
        "crossings": crossings_doc,
        "pairing": [list(p) for p in sorted(d.edges())],
    }
    comp = {}
    for comp_rec in components(d):
        if comp_rec.darts:
            comp[str(min(comp_rec.darts))] = comp_rec.label
    if comp:
        doc["components"] = {k: comp[k] for k in sorted(comp, key=int)}
    if d.free_loops:
        doc["free_loops"] = [{"label": fl.label, "region": fl.region} for fl in d.free_loops]
    genus = {str(r): g for r, g in sorted(d.region_genus) if g > 0}
    if genus:
        doc["region_genus"] = genus
    return doc


def serialize_diagram(d: Diagram) -> str:
    """Canonical JSON form; ``parse_diagram(serialize_diagram(d))``
    reproduces the same document byte for byte."""
    return json.dumps(diagram_doc(d), separators=(", ", ": "))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate_map(d: Diagram) -> ValidationReport:
    """Check every structural invariant; collect all violations, not just the first."""
    v: list[Violation] = []
    n = d.n_darts
    dart_list = [x for c in d.crossings for x in c.darts]
    dart_set = set(dart_list)
    structure_ok = True

    if len(dart_list) != len(dart_set) or (d.crossings and dart_set != set(range(n))):
        v.append(Violation("dart-ids", f"dart ids must be exactly 0..{n - 1}",
                           tuple(sorted(dart_set - set(range(n))))))
        structure_ok = False
    for ci, c in enumerate(d.crossings):
        if not 0 <= c.under <= 3:
            v.append(Violation("under-range", f"crossing {ci} under index {c.under} outside 0-3",
                               c.darts))
            structure_ok = False

    paired: set[int] = set()
    involution_ok = True
    for a, b in d.pairing:
        if a == b:
            v.append(Violation("fixed-point-free involution",
                               f"dart {a} is paired with itself", (a,)))
            involution_ok = False
        if a in paired or b in paired:
            v.append(Violation("fixed-point-free involution",
                               f"pair ({a}, {b}) reuses an already paired dart", (a, b)))
            involution_ok = False
        paired.update((a, b))
        if a not in dart_set or b not in dart_set:
            v.append(Violation("fixed-point-free involution",
                               f"pair ({a}, {b}) references unknown darts", (a, b)))
            involution_ok = False
    if structure_ok and paired != dart_set:
        missing = tuple(sorted(dart_set - paired))
        v.append(Violation("fixed-point-free involution",
                           f"darts {missing} are not paired", missing))
        involution_ok = False
    structure_ok = structure_ok and involution_ok

    if structure_ok:
        for seq in _dart_component_cycles(d):
            labels = {d.label_of(x) for x in seq}
            if len(labels) > 1:
                v.append(Violation("component-constancy",
                                   f"labels {sorted(labels)} mixed along one strand",
                                   tuple(seq[:2])))
        if d.n_crossings >= 1 and not _dart_graph_connected(d):
            v.append(Violation("connected-map",
                               "crossing darts do not form a connected map", ()))

        n_regions = len(_trace_dart_walks(d)) if d.n_crossings else 1
        for r, g in d.region_genus:
            if g < 0 or r < 0 or r >= n_regions:
                v.append(Violation("region-genus",
                                   f"region_genus[{r}]={g} is out of range", ()))
        base = n_regions if d.n_crossings else 1
        for i, fl in enumerate(d.free_loops):
            if not 0 <= fl.region < base + i:
                v.append(Violation("free-loops",
                                   f"free loop {fl.label!r} hosted in unknown region {fl.region}",
                                   ()))
    if not d.crossings and not d.free_loops:
        v.append(Violation("nonempty", "diagram has no crossings and no free loops", ()))

    return ValidationReport(ok=not v, violations=tuple(v))


def _dart_graph_connected(d: Diagram) -> bool:
    start = next(iter(d.darts()), None)
    if start is None:
        return True
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in (d.sigma(x), d.alpha(x)):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == d.n_darts


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------


def _trace_dart_walks(d: Diagram) -> list[tuple[Item, ...]]:
    """Orbits of (dart, side) items under the region-boundary successor rule."""
    walks: list[tuple[Item, ...]] = []
    visited: set[Item] = set()
    for dart in range(d.n_darts):
        for side in (SIDE_L, SIDE_R):
            if (dart, side) in visited:
                continue
            walk = []
            cur = (dart, side)
            while cur not in visited:
                visited.add(cur)
                walk.append(cur)
                x, s = cur
                cur = (d.alpha(x), SIDE_R) if s == SIDE_L else (d.sigma_inv(x), SIDE_L)
            walks.append(tuple(walk))
    return walks


def trace_regions(d: Diagram) -> list[RegionWalk]:
    """All regions in deterministic order: dart-traced walks first (lowest
    dart-side item first), then one region per free loop in declaration
    order.  A zero-crossing diagram contributes a single base region."""
    walks = _trace_dart_walks(d)
    regions = [RegionWalk(i, w, d.genus_of_region(i)) for i, w in enumerate(walks)]
    if not d.crossings:
        regions = [RegionWalk(0, (), d.genus_of_region(0))]
    base = len(regions)
    for i, _ in enumerate(d.free_loops):
        regions.append(RegionWalk(base + i, (), 0))
    return regions


def region_corners(d: Diagram, walk: RegionWalk) -> list[Corner]:
    """Corners of a region walk, one per arrival (R-side) item."""
    corners = []
    for x, s in walk.boundary:
        if s == SIDE_R:
            dep = d.sigma_inv(x)
            corners.append(Corner(d.crossing_of(x), dep, x))
    return corners


def region_of_items(d: Diagram) -> dict[Item, int]:
    """Map each (dart, side) item to the index of its region."""
    out: dict[Item, int] = {}
    for i, w in enumerate(_trace_dart_walks(d)):
        for item in w:
            out[item] = i
    return out


def edge_side_regions(d: Diagram, item_region: dict[Item, int] | None = None
                      ) -> dict[tuple[int, int], tuple[int, int]]:
    """For each edge ``(a, b)`` the two incident regions: the side left of
    ``a`` walking outward, then the side left of ``b``."""
    if item_region is None:
        item_region = region_of_items(d)
    return {
        (a, b): (item_region[(a, SIDE_L)], item_region[(b, SIDE_L)])
        for a, b in d.edges()
    }


def surface_genus(d: Diagram) -> int:
    """Genus of the ambient surface: Euler count of the cellular rotation
    system plus declared handle decorations."""
    extra = sum(g for _, g in d.region_genus)
    if not d.crossings:
        return extra
    V = d.n_crossings
    E = 2 * V
    F = len(_trace_dart_walks(d))
    num = 2 - V + E - F
    if num % 2 != 0 or num < 0:
        raise ParityError(f"Euler count 2 - V + E - F = {num} is not an even non-negative integer")
    return num // 2 + extra


# ---------------------------------------------------------------------------
# Components and strand hypotheses
# ---------------------------------------------------------------------------


def _dart_component_cycles(d: Diagram) -> list[list[int]]:
    cycles = []
    visited: set[int] = set()
    for start in range(d.n_darts):
        if start in visited:
            continue
        seq = []
        cur = start
        while True:
            seq.append(cur)
            visited.add(cur)
            out = d.strand_partner(cur)
            seq.append(out)
            visited.add(out)
            cur = d.alpha(out)
            if cur == start:
                break
        cycles.append(seq)
    return cycles


def components(d: Diagram) -> list[Component]:
    """Strand components in order of smallest dart, then free loops.

    Each dart appears in exactly one component; the cyclic sequence
    alternates arrival and departure darts along the strand.
    """
    out = [Component(d.label_of(seq[0]), tuple(seq)) for seq in _dart_component_cycles(d)]
    out.extend(Component(fl.label, ()) for fl in d.free_loops)
    return out


def is_alternating(d: Diagram) -> tuple[bool, int | None]:
    """Whether crossing passages strictly alternate over/under along every
    component.  Returns the first arrival dart at which alternation fails,
    or None.  Crossing-free components are vacuously alternating."""
    for comp in _dart_component_cycles(d):
        arrivals = comp[0::2]
        k = len(arrivals)
        for i in range(k):
            a, b = arrivals[i], arrivals[(i + 1) % k]
            if d.passage_is_under(a) == d.passage_is_under(b):
                return False, b
    return True, None


def is_reduced(d: Diagram) -> tuple[bool, int | None]:
    """Whether no disk region meets only one distinct crossing.

    Regions decorated with genus > 0 are not disks and are exempt.
    Returns the offending region index when the check fails."""
    for walk in trace_regions(d):
        if walk.genus > 0 or not walk.boundary:
            continue
        crossings = {c.crossing for c in region_corners(d, walk)}
        if len(crossings) == 1:
            return False, walk.index
    return True, None


# ---------------------------------------------------------------------------
# Diagram surgery helpers used by tests and the census
# ---------------------------------------------------------------------------


def make_diagram(crossings, pairing, labels: dict[int, str] | None = None,
                 region_genus: dict[int, int] | None = None,
                 free_loops: tuple[FreeLoop, ...] = ()) -> Diagram:
    """Build a Diagram from plain data, propagating component labels.

    ``crossings`` is a sequence of ``(darts, under)`` pairs or Crossing
    objects; ``labels`` optionally names components by any member dart.
    """
    built = tuple(
        c if isinstance(c, Crossing) else Crossing(tuple(c[0]), c[1]) for c in crossings
    )
    pairs = tuple(sorted(tuple(sorted(p)) for p in pairing))
    full = _propagate_labels(built, pairs, dict(labels or {}))
    return Diagram(
        crossings=built,
        pairing=pairs,
        component_of=tuple(sorted(full.items())),
        region_genus=tuple(sorted((r, g) for r, g in (region_genus or {}).items() if g > 0)),
        free_loops=tuple(free_loops),
    )


def mirror_diagram(d: Diagram) -> Diagram:
    """Exchange over- and under-passages at every crossing."""
    return Diagram(
        crossings=tuple(Crossing(c.darts, (c.under + 1) % 4) for c in d.crossings),
        pairing=d.pairing,
        component_of=d.component_of,
        region_genus=d.region_genus,
        free_loops=d.free_loops,
    )


def relabel_diagram(d: Diagram, perm: dict[int, int]) -> Diagram:
    """Apply a dart relabeling (a map isomorphism).  Only supported for
    undecorated diagrams, since region indices are labeling-dependent."""
    if d.region_genus or d.free_loops:
        raise ValueError("relabeling decorated diagrams is not supported")
    crossings = tuple(
        Crossing(tuple(perm[x] for x in c.darts), c.under) for c in d.crossings
    )
    pairing = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in d.pairing))
    labels = tuple(sorted((perm[dart], lab) for dart, lab in d.component_of))
    return Diagram(crossings=crossings, pairing=pairing, component_of=labels)
