"""Orbit closure, the symmetry-cost coefficient d, and the constructive
invariant cover built from a minimum cover of the closure.

The closure enumerates, for every edge, all selections that move each
vertex inside its own orbit while keeping the selected vertices pairwise
distinct. Per-orbit intersection counts are preserved by such selections,
so the closure never changes the rank or the part degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import Hypergraph
from .covers import CoverResult, InvariantCoverResult, is_cover, min_cover
from .errors import CapExceededError, InternalInvariantError, InvalidActionError
from .groups import GroupAction, check_action

CLOSURE_EDGE_CAP = 100_000


@dataclass(frozen=True)
class ClosureResult:
    closed: Hypergraph
    generated_edge_count: int


@dataclass(frozen=True)
class DCoefficient:
    value: Fraction
    witness_edge: frozenset[str] | None
    witness_orbit: frozenset[str] | None
    degenerate: bool = False  # no edges: value 1 by convention


@dataclass(frozen=True)
class ClosureCoverAudit:
    cover_of_closure: CoverResult
    invariant_cover: InvariantCoverResult
    d: DCoefficient

    @property
    def bound_holds(self) -> bool:
        return self.invariant_cover.size <= self.d.value * self.cover_of_closure.size


def orbit_closure(
    hypergraph: Hypergraph, action: GroupAction, cap: int = CLOSURE_EDGE_CAP
) -> ClosureResult:
    if not check_action(hypergraph, action):
        raise InvalidActionError("a generator is not an automorphism of the hypergraph")
    orbit_of = action.orbit_map()
    closed: set[frozenset[str]] = set()
    generated = 0
    for e in hypergraph.sorted_edges():
        members = sorted(e)
        pools = [sorted(orbit_of[v]) for v in members]
        # product() over zero pools yields one empty selection, so the
        # empty edge survives closure unchanged.
        for selection in product(*pools):
            if len(set(selection)) != len(members):
                continue
            generated += 1
            if generated > cap:
                raise CapExceededError(f"orbit closure exceeded cap {cap} generated edges")
            closed.add(frozenset(selection))
    return ClosureResult(
        closed=Hypergraph(vertices=hypergraph.vertices, edges=frozenset(closed)),
        generated_edge_count=generated,
    )


def d_coefficient(hypergraph: Hypergraph, action: GroupAction) -> DCoefficient:
    """max over edges e and orbits O of |O| / (|O minus e| + 1), at least 1."""
    if not hypergraph.edges:
        return DCoefficient(Fraction(1), None, None, degenerate=True)
    best = Fraction(0)
    witness: tuple[frozenset[str], frozenset[str]] | None = None
    for e in hypergraph.sorted_edges():
        for orbit in sorted(action.orbit_partition, key=min):
            ratio = Fraction(len(orbit), len(orbit - e) + 1)
            if ratio > best:
                best = ratio
                witness = (e, orbit)
    assert witness is not None
    return DCoefficient(best, witness[0], witness[1])


def max_orbit_degree(edges: frozenset[frozenset[str]], orbit: frozenset[str]) -> int:
    return max((len(e & orbit) for e in edges), default=0)


def check_star_star(
    closed: Hypergraph, cover: frozenset[str], action: GroupAction
) -> bool:
    """The pointwise inequality behind the closure bound.

    For every orbit meeting the given minimum cover of the closure, the
    orbit's part outside the cover is at most the largest edge-orbit
    intersection minus one.
    """
    for orbit in action.orbit_partition:
        if orbit & cover:
            if len(orbit - cover) > max_orbit_degree(closed.edges, orbit) - 1:
                return False
    return True


def invariant_cover_via_closure(
    hypergraph: Hypergraph, action: GroupAction, cap: int = CLOSURE_EDGE_CAP
) -> ClosureCoverAudit:
    """Build an invariant cover as the orbit hull of a minimum closure cover.

    Returns the audit triple (|X|, Y, d) and asserts |Y| <= d * |X|, which
    the closure bound guarantees.
    """
    closure = orbit_closure(hypergraph, action, cap=cap)
    cover = min_cover(closure.closed)
    d = d_coefficient(hypergraph, action)
    # Per-orbit edge degrees agree between source and closure; a mismatch
    # would invalidate the pointwise inequality, so it is checked here.
    for orbit in action.orbit_partition:
        if max_orbit_degree(hypergraph.edges, orbit) != max_orbit_degree(
            closure.closed.edges, orbit
        ):
            raise InternalInvariantError("closure changed a per-orbit edge degree")
    chosen = [orbit for orbit in action.orbit_partition if orbit & cover.witness]
    union = frozenset().union(*chosen) if chosen else frozenset()
    invariant = InvariantCoverResult(
        size=len(union),
        witness=union,
        chosen_orbits=frozenset(min(o) for o in chosen),
    )
    audit = ClosureCoverAudit(cover, invariant, d)
    if not is_cover(hypergraph, union) and hypergraph.edges:
        raise InternalInvariantError("orbit hull of a closure cover failed to cover")
    if not audit.bound_holds:
        raise InternalInvariantError("closure bound |Y| <= d |X| violated")
    if not check_star_star(closure.closed, cover.witness, action):
        raise InternalInvariantError("pointwise closure inequality violated")
    return audit
