"""Fixtures, exhaustive censuses, and seeded random diagrams.

The census enumerates rotation systems with under-strand markers up to a
crossing cap: crossings own fixed dart blocks ``4i..4i+3`` in
counterclockwise order, edge pairings are generated by backtracking with
an activation order that prunes most label symmetry, and the survivors
are deduplicated by a canonical form minimized over dart relabelings.
Mirror images are distinct; under markers are compared modulo the strand
passage they designate.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import (
    Crossing,
    Diagram,
    FreeLoop,
    components,
    is_alternating,
    is_reduced,
    make_diagram,
    relabel_diagram,
)
from .errors import CapExceededError

DEFAULT_MAX_CROSSINGS = 8
DEFAULT_MAX_GENUS = 2

FILTER_NAMES = ("alternating", "reduced", "prime", "knot", "link")


@dataclass(frozen=True)
class CensusSpec:
    """Parameters of a census sweep."""

    max_crossings: int
    genus_range: tuple[int, int] = (0, DEFAULT_MAX_GENUS)
    filters: frozenset[str] = field(default_factory=frozenset)
    seed: int | None = None


def _cap() -> int:
    return int(os.environ.get("GADC_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS))


# ---------------------------------------------------------------------------
# Permutation helpers on the fixed dart blocks
# ---------------------------------------------------------------------------


def _sigma_of(d: int) -> int:
    return 4 * (d // 4) + (d + 1) % 4


def _connected(n: int, alpha: list[int]) -> bool:
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in (_sigma_of(u), alpha[u]):
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def _face_count(n: int, alpha: list[int]) -> int:
    seen = [False] * n
    faces = 0
    for start in range(n):
        if seen[start]:
            continue
        faces += 1
        d = start
        while not seen[d]:
            seen[d] = True
            d = _sigma_of(alpha[d])
    return faces


def _matchings(C: int) -> Iterator[list[int]]:
    """All edge pairings on 4C darts, generated with activation pruning.

    The smallest unused dart may pair with any unused dart of an already
    activated crossing, or with the smallest dart of the first inactive
    crossing; this visits every matching exactly once while cutting the
    bulk of crossing-relabeling symmetry.
    """
    n = 4 * C
    alpha = [-1] * n

    def backtrack(unused: int, active: int) -> Iterator[list[int]]:
        if unused == 0:
            yield alpha
            return
        i = (unused & -unused).bit_length() - 1
        local_active = active | (1 << (i // 4))
        candidates = []
        for x in range(C):
            if (local_active >> x) & 1:
                for d in range(4 * x, 4 * x + 4):
                    if d != i and (unused >> d) & 1:
                        candidates.append(d)
        for x in range(C):
            if not (local_active >> x) & 1:
                candidates.append(4 * x)
                break
        for j in candidates:
            alpha[i] = j
            alpha[j] = i
            nxt = unused & ~(1 << i) & ~(1 << j)
            yield from backtrack(nxt, local_active | (1 << (j // 4)))
            alpha[i] = -1
            alpha[j] = -1

    yield from backtrack((1 << n) - 1, 0)


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def _relabel_from(n: int, sigma: list[int], alpha: list[int], root: int) -> list[int]:
    """old dart -> new label, by deterministic DFS (sigma neighbor first)."""
    new = [-1] * n
    order = 0
    stack = [root]
    while stack:
        u = stack.pop()
        if new[u] != -1:
            continue
        new[u] = order
        order += 1
        stack.append(alpha[u])
        stack.append(sigma[u])
    return new


def _map_key_for_root(n, sigma, alpha, root):
    """(alpha_new, sigma_new, representative old darts of the sigma-cycles)."""
    new = _relabel_from(n, sigma, alpha, root)
    old_of = [0] * n
    for old, nw in enumerate(new):
        old_of[nw] = old
    sigma_new = tuple(new[sigma[old_of[i]]] for i in range(n))
    alpha_new = tuple(new[alpha[old_of[i]]] for i in range(n))
    seen = [False] * n
    reps = []
    for i in range(n):
        if seen[i]:
            continue
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma_new[j]
        reps.append(old_of[i])
    return alpha_new, sigma_new, tuple(reps)


def _canonical_map_data(n, sigma, alpha):
    """Minimal (alpha, sigma) relabeling plus the cycle representatives of
    every minimizing relabeling (one per automorphism)."""
    best = None
    best_reps: list[tuple[int, ...]] = []
    for root in range(n):
        alpha_new, sigma_new, reps = _map_key_for_root(n, sigma, alpha, root)
        key = (alpha_new, sigma_new)
        if best is None or key < best:
            best = key
            best_reps = [reps]
        elif key == best:
            best_reps.append(reps)
    return best, best_reps


def _key_for_root(n, sigma, alpha, under_of_dart, root):
    alpha_new, sigma_new, reps = _map_key_for_root(n, sigma, alpha, root)
    # marker bit = 0 iff the passage through the cycle's minimal new dart
    # is an under-passage (intrinsic, label-free)
    bits = tuple(0 if under_of_dart[old] else 1 for old in reps)
    return alpha_new, sigma_new, bits


def canonical_key(d: Diagram):
    """Canonical form of an undecorated diagram under dart relabelings.

    Minimizes a deterministic traversal encoding over every root dart.
    Mirrors are not identified; markers are compared by the passage they
    designate.
    """
    n = d.n_darts
    sigma = [d.sigma(x) for x in range(n)]
    alpha = [d.alpha(x) for x in range(n)]
    under = [d.passage_is_under(x) for x in range(n)]
    return min(_key_for_root(n, sigma, alpha, under, r) for r in range(n))


def diagram_from_key(key) -> Diagram:
    """Rebuild the representative diagram of a canonical key."""
    alpha_new, sigma_new, bits = key
    n = len(alpha_new)
    seen = [False] * n
    crossings = []
    ci = 0
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = sigma_new[j]
        crossings.append((tuple(cyc), bits[ci]))
        ci += 1
    pairing = sorted({tuple(sorted((i, alpha_new[i]))) for i in range(n)})
    return make_diagram(crossings, pairing)


# ---------------------------------------------------------------------------
# Marker assignments
# ---------------------------------------------------------------------------


def _strand_passages(C: int, alpha: list[int]) -> list[list[int]]:
    """Cyclic arrival-dart sequences of each strand component."""
    n = 4 * C
    visited = [False] * n
    comps = []
    for start in range(n):
        if visited[start]:
            continue
        seq = []
        cur = start
        while True:
            seq.append(cur)
            visited[cur] = True
            out = 4 * (cur // 4) + (cur + 2) % 4
            visited[out] = True
            cur = alpha[out]
            if cur == start:
                break
        comps.append(seq)
    return comps


def _marker_assignments(C: int, alpha: list[int], alternating: bool) -> Iterator[tuple[int, ...]]:
    """Yield under-marker bit tuples (one bit per crossing).

    Bit ``b`` means: the under-passage of crossing ``x`` is the one whose
    arrival positions have parity ``b``.  In alternating mode the bits are
    solved from the alternation constraints instead of enumerated.
    """
    if not alternating:
        yield from _all_bits(C)
        return
    comps = _strand_passages(C, alpha)
    # parity union-find over crossing bits: consecutive passages must
    # alternate under/over
    parent = list(range(C))
    offset = [0] * C  # parity of bit relative to the parent link

    def root_and_parity(x):
        p = 0
        while parent[x] != x:
            p ^= offset[x]
            x = parent[x]
        return x, p

    ok = True
    for seq in comps:
        k = len(seq)
        if k % 2 == 1:
            ok = False
            break
        for t in range(k):
            a, b = seq[t], seq[(t + 1) % k]
            xa, xb = a // 4, b // 4
            # status(a) = (pos(a)%2 == bit_xa); alternation: status(a) != status(b)
            rel = (a % 2) ^ (b % 2) ^ 1  # bit_xa XOR bit_xb required value
            ra, pa = root_and_parity(xa)
            rb, pb = root_and_parity(xb)
            if ra == rb:
                if pa ^ pb != rel:
                    ok = False
                    break
            else:
                parent[ra] = rb
                offset[ra] = pa ^ pb ^ rel
        if not ok:
            break
    if not ok:
        return
    roots = sorted({root_and_parity(x)[0] for x in range(C)})
    for choice in _all_bits(len(roots)):
        root_bit = dict(zip(roots, choice))
        bits = []
        for x in range(C):
            r, p = root_and_parity(x)
            bits.append(root_bit[r] ^ p)
        yield tuple(bits)


def _all_bits(k: int) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << k):
        yield tuple((mask >> i) & 1 for i in range(k))


# ---------------------------------------------------------------------------
# Named fixtures
# ---------------------------------------------------------------------------

_TREFOIL_CROSSINGS = (((0, 1, 2, 3), 1), ((4, 5, 6, 7), 0), ((8, 9, 10, 11), 0))
_TREFOIL_PAIRS = ((0, 8), (1, 7), (2, 6), (3, 9), (4, 11), (5, 10))


def _trefoil() -> Diagram:
    """Standard 3-crossing diagram, labeled so region 0 starts the black
    2-region class and the white class is the Möbius band."""
    return make_diagram(_TREFOIL_CROSSINGS, _TREFOIL_PAIRS)


def _figure_eight() -> Diagram:
    """Standard alternating 4-crossing diagram (the unique reduced prime
    alternating 4-crossing knot diagram on the sphere)."""
    return make_diagram(
        (((0, 1, 2, 3), 0), ((4, 5, 6, 7), 0), ((8, 9, 10, 11), 1), ((12, 13, 14, 15), 0)),
        ((0, 7), (1, 11), (2, 15), (3, 4), (5, 14), (6, 8), (9, 13), (10, 12)),
    )


def _torus_2n(n: int) -> Diagram:
    """Standard (2, n) diagram: n crossings in a cycle, two parallel strands.

    Dart labels at crossing 0 are rotated so the n-bigon class is white;
    for odd n that class closes into a Möbius band.
    """
    pairs = []
    for i in range(n):
        j = (i + 1) % n
        pairs.append((4 * i + 1, 4 * j + 2))
        pairs.append((4 * i, 4 * j + 3))
    d = make_diagram([(tuple(range(4 * i, 4 * i + 4)), 0) for i in range(n)], pairs)
    perm = {x: x for x in range(4 * n)}
    for j in range(4):
        perm[j] = (j + 1) % 4
    return relabel_diagram(d, perm)


def _one_crossing_torus() -> Diagram:
    return make_diagram([((0, 1, 2, 3), 0)], [(0, 2), (1, 3)])


def _weave_2x2() -> Diagram:
    """2x2 alternating grid on the torus; face-width 2."""
    pairs = []
    for i in range(2):
        for j in range(2):
            c = 2 * i + j
            east = 2 * i + (j + 1) % 2
            north = 2 * ((i + 1) % 2) + j
            pairs.append((4 * c, 4 * east + 2))
            pairs.append((4 * c + 1, 4 * north + 3))
    crossings = [(tuple(range(4 * c, 4 * c + 4)), (c // 2 + c % 2) % 2) for c in range(4)]
    return make_diagram(crossings, pairs)


def _granny() -> Diagram:
    """Composite 6-crossing diagram: two trefoil summands joined along a
    cut edge of each; alternating and reduced but not prime."""
    cut = (0, 8)
    pairs = [p for p in _TREFOIL_PAIRS if p != cut]
    pairs += [(a + 12, b + 12) for a, b in _TREFOIL_PAIRS if (a, b) != cut]
    pairs += [(0, 20), (8, 12)]
    crossings = list(_TREFOIL_CROSSINGS)
    crossings += [(tuple(x + 12 for x in darts), u) for darts, u in _TREFOIL_CROSSINGS]
    return make_diagram(crossings, pairs)


def _kinked_trefoil() -> Diagram:
    """Trefoil with a curl inserted on one edge; fails the reduced check."""
    pairs = [p for p in _TREFOIL_PAIRS if p != (0, 8)]
    pairs += [(14, 15), (0, 12), (8, 13)]
    return make_diagram(list(_TREFOIL_CROSSINGS) + [((12, 13, 14, 15), 0)], pairs)


def _split_two_loops() -> Diagram:
    """Two crossing-free circles in distinct regions: a split 2-component
    link with no crossings (the free-loop extension)."""
    return Diagram(
        crossings=(),
        pairing=(),
        free_loops=(FreeLoop("a", 0), FreeLoop("b", 1)),
    )


def fixtures() -> dict[str, Diagram]:
    """Named diagrams used across the tests, demos, and CLI data files."""
    return {
        "trefoil": _trefoil(),
        "figure-eight": _figure_eight(),
        "(2,3)": _torus_2n(3),
        "(2,5)": _torus_2n(5),
        "(2,7)": _torus_2n(7),
        "one-crossing-torus": _one_crossing_torus(),
        "weave": _weave_2x2(),
        "granny": _granny(),
        "hopf": _torus_2n(2),
        "kinked-trefoil": _kinked_trefoil(),
        "split-loops": _split_two_loops(),
    }


# ---------------------------------------------------------------------------
# Public census API
# ---------------------------------------------------------------------------


def enumerate_diagrams(spec: CensusSpec) -> Iterator[Diagram]:
    """Deterministic stream of canonical diagrams satisfying the spec.

    Enumerates connected rotation systems with ``1..max_crossings``
    crossings and cellular genus inside ``genus_range``, carrying under
    markers; deduplicates by canonical form and applies the requested
    filters.  Free-loop diagrams are not enumerated.
    """
    cap = _cap()
    if spec.max_crossings > cap:
        raise CapExceededError(f"max_crossings {spec.max_crossings} exceeds cap {cap}")
    if spec.max_crossings < 1:
        raise CapExceededError("max_crossings must be >= 1")
    unknown = set(spec.filters) - set(FILTER_NAMES)
    if unknown:
        raise CapExceededError(f"unknown filters: {sorted(unknown)}")
    lo, hi = spec.genus_range
    want_alt = "alternating" in spec.filters

    for C in range(1, spec.max_crossings + 1):
        seen_maps: set = set()
        keys = []
        n = 4 * C
        sigma = [_sigma_of(x) for x in range(n)]
        for alpha in _matchings(C):
            if not _connected(n, alpha):
                continue
            F = _face_count(n, alpha)
            genus = (2 - C + 2 * C - F)
            if genus % 2:
                continue
            genus //= 2
            if not lo <= genus <= hi:
                continue
            map_key, rep_lists = _canonical_map_data(n, sigma, alpha)
            if map_key in seen_maps:
                continue
            seen_maps.add(map_key)
            marker_keys = set()
            for bits in _marker_assignments(C, alpha, want_alt):
                under_of_dart = [bits[x // 4] == (x % 2) for x in range(n)]
                marker_keys.add(min(
                    tuple(0 if under_of_dart[old] else 1 for old in reps)
                    for reps in rep_lists
                ))
            for mk in sorted(marker_keys):
                keys.append(map_key + (mk,))
        for key in sorted(keys):
            d = diagram_from_key(key)
            if not _passes_filters(d, spec.filters):
                continue
            yield d


def enumerate_maps(max_crossings: int, genus_range: tuple[int, int]) -> Iterator[Diagram]:
    """One diagram per canonical underlying map (all markers zero).

    Marker-independent properties (regions, genus, primality, face-width)
    are exhausted by sweeping these representatives.
    """
    cap = _cap()
    if not 1 <= max_crossings <= cap:
        raise CapExceededError(f"max_crossings {max_crossings} outside 1..{cap}")
    lo, hi = genus_range
    for C in range(1, max_crossings + 1):
        n = 4 * C
        sigma = [_sigma_of(x) for x in range(n)]
        seen: set = set()
        keys = []
        for alpha in _matchings(C):
            if not _connected(n, alpha):
                continue
            F = _face_count(n, alpha)
            genus = 2 - C + 2 * C - F
            if genus % 2:
                continue
            genus //= 2
            if not lo <= genus <= hi:
                continue
            map_key, _ = _canonical_map_data(n, sigma, alpha)
            if map_key in seen:
                continue
            seen.add(map_key)
            keys.append(map_key)
        for key in sorted(keys):
            yield diagram_from_key(key + ((0,) * C,))


def _passes_filters(d: Diagram, filters: frozenset[str]) -> bool:
    from .primality import is_prime

    if "alternating" in filters and not is_alternating(d)[0]:
        return False
    if "reduced" in filters and not is_reduced(d)[0]:
        return False
    if "prime" in filters and not is_prime(d)[0]:
        return False
    n_comp = len(components(d))
    if "knot" in filters and n_comp != 1:
        return False
    if "link" in filters and n_comp < 2:
        return False
    return True


def random_diagram(crossings: int, seed: int) -> Diagram:
    """Seeded, reproducible sampling of a valid connected diagram."""
    if crossings < 1:
        raise ValueError("crossings must be >= 1")
    rng = random.Random(seed)
    n = 4 * crossings
    while True:
        darts = list(range(n))
        rng.shuffle(darts)
        alpha = [-1] * n
        for i in range(0, n, 2):
            a, b = darts[i], darts[i + 1]
            alpha[a] = b
            alpha[b] = a
        if _connected(n, alpha):
            break
    bits = [rng.randint(0, 3) for _ in range(crossings)]
    crossings_data = [(tuple(range(4 * x, 4 * x + 4)), bits[x]) for x in range(crossings)]
    pairing = sorted({tuple(sorted((i, alpha[i]))) for i in range(n)})
    return make_diagram(crossings_data, pairing)
