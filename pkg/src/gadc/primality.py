"""Primality of a diagram via exhaustive two-point loop classification.

A diagram is prime when it has at least one crossing and every simple
loop meeting it in two non-crossing points bounds a disk containing a
single crossing-free arc.  With all regions disks, an isotopy class of
such loops is determined by which edge passages its two crossing points
hook into, so the classes are finitely enumerable: same-edge loops and
loops through two distinct edges, with each crossing point engaging both
passages of its edge and the two arcs pairing them up region by region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import Diagram, components
from .errors import NonCellularError
from .surgery import CutContext, Door, cut_two_point_loop, make_cut_context

TRIVIAL_ARC = "TrivialArc"
ESSENTIAL_IN_F = "EssentialInF"
SEPARATING_NONTRIVIAL = "SeparatingNontrivial"


@dataclass(frozen=True)
class TwoCut:
    """One isotopy class of loops meeting the diagram in two edge points.

    ``passages`` records, per crossing point, its edge and the walk
    appearances (region, position) of that edge's two passages;
    ``via_regions`` the regions carrying the two loop arcs; ``arcs`` the
    door pairing, each door naming its crossing point and passage lead
    dart.
    """

    passages: tuple[tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...]
    via_regions: tuple[int, int]
    arcs: tuple[tuple[Door, Door], tuple[Door, Door]]
    cls: str

    def as_dict(self) -> dict:
        return {
            "edges": [list(edge) for edge, _ in self.passages],
            "appearances": [[list(app) for app in apps] for _, apps in self.passages],
            "via_regions": list(self.via_regions),
            "arcs": [[list(door) for door in arc] for arc in self.arcs],
            "class": self.cls,
        }


class PrimeVerdict(NamedTuple):
    ok: bool
    witness: TwoCut | None
    reason: str | None


def _classify(d: Diagram, ctx: CutContext, points, arcs, lambda_choices) -> str | None:
    """Class of the loop, or None when no chord layout is embeddable."""
    for lambdas in lambda_choices:
        try:
            result = cut_two_point_loop(d, ctx, points, arcs, lambdas)
        except ValueError:
            continue
        if not result.separating:
            return ESSENTIAL_IN_F
        if any(s.is_trivial_disk for s in result.sides):
            return TRIVIAL_ARC
        if any(s.chi == 1 for s in result.sides):
            return SEPARATING_NONTRIVIAL
        return ESSENTIAL_IN_F
    return None


def _passage_record(ctx: CutContext, edge) -> tuple[tuple[int, int], tuple]:
    apps = tuple(ctx.item_pos[(lead, 0)] for lead in edge)
    return edge, apps


def enumerate_two_cuts(d: Diagram) -> list[TwoCut]:
    """One representative per isotopy class of two-point loops.

    Requires every region to be a disk; raises :class:`NonCellularError`
    otherwise (a genus-carrying region admits an essential loop and the
    caller must treat the diagram as non-prime).  Free loops take no part
    in the enumeration.  Deterministic order: same-edge loops (parallel,
    then crossed) for each edge in ascending order, then distinct-edge
    pairs lexicographically with the aligned matching first.
    """
    for r, g in d.region_genus:
        if g > 0:
            raise NonCellularError(r, g)
    ctx = make_cut_context(d)
    out: list[TwoCut] = []
    edges = d.edges()
    P, Q = 0, 1
    for e in edges:
        a, b = e
        ra, rb = ctx.passage_region[a], ctx.passage_region[b]
        # parallel: both arcs hug the edge between the two points; the loop
        # always bounds a disk containing a crossing-free sub-edge
        out.append(TwoCut(
            passages=(_passage_record(ctx, e), _passage_record(ctx, e)),
            via_regions=(ra, rb),
            arcs=(((P, a), (Q, a)), ((P, b), (Q, b))),
            cls=TRIVIAL_ARC,
        ))
        if ra == rb:
            arcs = (((P, a), (Q, b)), ((P, b), (Q, a)))
            cls = _classify(d, ctx, (e, e), arcs, ((0.25, 0.75), (0.75, 0.25)))
            if cls is not None:
                out.append(TwoCut(
                    passages=(_passage_record(ctx, e), _passage_record(ctx, e)),
                    via_regions=(ra, ra),
                    arcs=arcs,
                    cls=cls,
                ))
    for i, e1 in enumerate(edges):
        a1, b1 = e1
        for e2 in edges[i + 1:]:
            a2, b2 = e2
            reg = ctx.passage_region
            matchings = (
                (((P, a1), (Q, a2)), ((P, b1), (Q, b2))),
                (((P, a1), (Q, b2)), ((P, b1), (Q, a2))),
            )
            for arcs in matchings:
                (d1, d2), (d3, d4) = arcs
                r_first = reg[d1[1]]
                r_second = reg[d3[1]]
                if reg[d2[1]] != r_first or reg[d4[1]] != r_second:
                    continue
                cls = _classify(d, ctx, (e1, e2), arcs, ((0.5, 0.5),))
                if cls is None:
                    continue
                out.append(TwoCut(
                    passages=(_passage_record(ctx, e1), _passage_record(ctx, e2)),
                    via_regions=(r_first, r_second),
                    arcs=arcs,
                    cls=cls,
                ))
    return out


def is_prime(d: Diagram) -> PrimeVerdict:
    """Decide primality; on failure return a witness loop or a reason.

    False when the diagram has no crossing, when a free loop makes the
    underlying curve system disconnected, when some region is not a disk,
    or when some two-point loop is essential or separates off more than a
    crossing-free arc.
    """
    if d.n_crossings == 0:
        return PrimeVerdict(False, None, "no crossings")
    if d.free_loops:
        labels = ", ".join(fl.label for fl in d.free_loops)
        return PrimeVerdict(False, None, f"disconnected diagram: free loop(s) {labels}")
    for r, g in d.region_genus:
        if g > 0:
            return PrimeVerdict(False, None, f"region {r} has genus {g}, not a disk")
    for tc in enumerate_two_cuts(d):
        if tc.cls != TRIVIAL_ARC:
            return PrimeVerdict(False, tc, "loop does not bound a single crossing-free arc")
    return PrimeVerdict(True, None, None)
