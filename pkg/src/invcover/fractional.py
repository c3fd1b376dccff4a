"""Exact fractional covers: the LP quantities, the orbit mean, the finite cut.

Optimality is always certified by a primal-dual pair computed from two
independent simplex solves: the cover (or orbit-cover) LP on one side and
the fractional-matching LP on the other. Exact equality of the two values
is the optimality proof; a mismatch is a solver bug, never tolerated. For
the orbit LP the matching certificate is valid precisely because invariant
and plain fractional covers share the same optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Hypergraph
from .errors import InternalInvariantError, InvalidActionError, UncoverableError
from .groups import GroupAction, check_action
from .simplex import lp_max_le, lp_min_ge

Rational = Fraction | int


@dataclass(frozen=True)
class FractionalCover:
    """A map vertex -> rational in [0,1]; absent vertices carry 0."""

    values: tuple[tuple[str, Fraction], ...]

    @staticmethod
    def build(values: Mapping[str, Rational]) -> "FractionalCover":
        cleaned: list[tuple[str, Fraction]] = []
        for v, raw in values.items():
            x = Fraction(raw)
            if x < 0 or x > 1:
                raise ValueError(f"value for {v} outside [0,1]: {x}")
            if x != 0:
                cleaned.append((v, x))
        return FractionalCover(tuple(sorted(cleaned)))

    def get(self, v: str) -> Fraction:
        return dict(self.values).get(v, Fraction(0))

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.values)

    @property
    def size(self) -> Fraction:
        return sum((x for _, x in self.values), Fraction(0))

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.values)


@dataclass(frozen=True)
class LpResult:
    optimum: Fraction
    primal_witness: FractionalCover
    dual_witness: dict[frozenset[str], Fraction]


def is_fractional_cover(hypergraph: Hypergraph, cover: FractionalCover) -> bool:
    """True iff every edge's value sum is at least 1 (exact comparison)."""
    vals = cover.as_dict()
    one = Fraction(1)
    for e in hypergraph.edges:
        if sum((vals.get(v, Fraction(0)) for v in e), Fraction(0)) < one:
            return False
    return True


def _solve_matching(hypergraph: Hypergraph) -> tuple[Fraction, dict[frozenset[str], Fraction]]:
    """Max fractional matching: max sum(y) s.t. sum_{e containing v} y_e <= 1."""
    edges = hypergraph.sorted_edges()
    vertices = hypergraph.sorted_vertices()
    gains = [Fraction(1)] * len(edges)
    rows = []
    for v in vertices:
        rows.append(([Fraction(1 if v in e else 0) for e in edges], Fraction(1)))
    value, y = lp_max_le(gains, rows)
    witness = {e: y_e for e, y_e in zip(edges, y) if y_e != 0}
    return value, witness


def _check_certificate(
    hypergraph: Hypergraph,
    optimum: Fraction,
    witness: FractionalCover,
    dual: dict[frozenset[str], Fraction],
) -> None:
    if witness.size != optimum:
        raise InternalInvariantError("primal witness size differs from optimum")
    if not is_fractional_cover(hypergraph, witness):
        raise InternalInvariantError("primal witness is not a fractional cover")
    for y_e in dual.values():
        if y_e < 0:
            raise InternalInvariantError("negative dual value")
    for v in hypergraph.vertices:
        load = sum((y_e for e, y_e in dual.items() if v in e), Fraction(0))
        if load > 1:
            raise InternalInvariantError("dual witness overloads a vertex")
    if sum(dual.values(), Fraction(0)) != optimum:
        raise InternalInvariantError("dual witness total differs from optimum")


def tau_star(hypergraph: Hypergraph) -> LpResult:
    """Exact minimum size of a fractional cover, with primal-dual certificate."""
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    if not hypergraph.edges:
        return LpResult(Fraction(0), FractionalCover.build({}), {})
    vertices = hypergraph.sorted_vertices()
    edges = hypergraph.sorted_edges()
    costs = [Fraction(1)] * len(vertices)
    ge_rows = []
    for e in edges:
        ge_rows.append(([Fraction(1 if v in e else 0) for v in vertices], Fraction(1)))
    # The unit upper bounds are redundant at an optimum but keep every
    # witness inside [0,1] by construction.
    ubs = [Fraction(1)] * len(vertices)
    value, t = lp_min_ge(costs, ge_rows, ubs)
    match_value, dual = _solve_matching(hypergraph)
    if match_value != value:
        raise InternalInvariantError(
            f"primal-dual gap in tau*: cover LP {value} vs matching LP {match_value}"
        )
    witness = FractionalCover.build({v: x for v, x in zip(vertices, t) if x != 0})
    _check_certificate(hypergraph, value, witness, dual)
    return LpResult(value, witness, dual)


def tau_star_invariant(hypergraph: Hypergraph, action: GroupAction) -> LpResult:
    """Exact minimum size of an invariant fractional cover (orbit-variable LP).

    The certificate is the plain fractional-matching optimum: its value
    must equal the orbit LP optimum exactly, which is the invariant-cover
    equality theorem checked on every call.
    """
    if not check_action(hypergraph, action):
        raise InvalidActionError("a generator is not an automorphism of the hypergraph")
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    if not hypergraph.edges:
        return LpResult(Fraction(0), FractionalCover.build({}), {})
    orbits = sorted(action.orbit_partition, key=min)
    edges = hypergraph.sorted_edges()
    costs = [Fraction(len(orbit)) for orbit in orbits]
    ge_rows = []
    for e in edges:
        ge_rows.append(([Fraction(len(e & orbit)) for orbit in orbits], Fraction(1)))
    ubs = [Fraction(1)] * len(orbits)
    value, x = lp_min_ge(costs, ge_rows, ubs)
    match_value, dual = _solve_matching(hypergraph)
    if match_value != value:
        raise InternalInvariantError(
            f"invariant fractional optimum {value} differs from tau* {match_value}"
        )
    expanded: dict[str, Fraction] = {}
    for orbit, x_o in zip(orbits, x):
        if x_o != 0:
            for v in orbit:
                expanded[v] = x_o
    witness = FractionalCover.build(expanded)
    _check_certificate(hypergraph, value, witness, dual)
    return LpResult(value, witness, dual)


def verify_lp_certificate(hypergraph: Hypergraph, result: LpResult) -> bool:
    """Re-check a primal-dual pair from scratch; used by tests and the CLI."""
    try:
        _check_certificate(
            hypergraph, result.optimum, result.primal_witness, result.dual_witness
        )
    except InternalInvariantError:
        return False
    return True


def mean_cover(cover: FractionalCover, action: GroupAction) -> FractionalCover:
    """Orbit-average of a fractional cover: constant on orbits, same size.

    Averaging never needs the group enumerated; the orbit form of the mean
    is used directly.
    """
    unknown = cover.support - action.vertices
    if unknown:
        raise ValueError(f"cover supported outside the action's vertex set: {sorted(unknown)}")
    vals = cover.as_dict()
    averaged: dict[str, Fraction] = {}
    for orbit in action.orbit_partition:
        mass = sum((vals.get(v, Fraction(0)) for v in orbit), Fraction(0))
        if mass != 0:
            share = mass / len(orbit)
            for v in orbit:
                averaged[v] = share
    return FractionalCover.build(averaged)


def mean_cover_by_group_sum(
    cover: FractionalCover, action: GroupAction, cap: int = 10**6
) -> FractionalCover:
    """The |G|-sum form of the mean, for the finite-group cross-check only."""
    from .groups import enumerate_group

    elements = enumerate_group(action.generators, action.vertices, cap=cap)
    vals = cover.as_dict()
    order = len(elements)
    out: dict[str, Fraction] = {}
    for v in action.vertices:
        total = sum((vals.get(g[v], Fraction(0)) for g in elements), Fraction(0))
        if total != 0:
            out[v] = total / order
    return FractionalCover.build(out)


def _cut_set(edges: set[frozenset[str]], values: dict[str, Fraction]) -> set[str]:
    """The recursive finite-cut kernel: a set K with t[K] still a cover.

    Recursion depth is bounded by the rank: every derived hypergraph drops
    each surviving edge's cardinality by one.
    """
    if not edges:
        return set()
    r = max(len(e) for e in edges)
    threshold = Fraction(1, r)
    high = {u for u, x in values.items() if x >= threshold}
    ones = {u for u, x in values.items() if x == 1}
    kept = set(ones)
    for u in sorted(high - ones):
        sub_edges = {e - {u} for e in edges if u in e}
        scale = Fraction(1) - values[u]
        sub_values = {
            v: min(Fraction(1), x / scale) for v, x in values.items() if v != u and x != 0
        }
        kept.add(u)
        kept |= _cut_set(sub_edges, sub_values)
    return kept


def finite_cut(hypergraph: Hypergraph, cover: FractionalCover) -> FractionalCover:
    """Zero a fractional cover outside a finite set K while staying a cover.

    K follows the constructive recursion for high-value vertices: take the
    vertices at value one, and for every other vertex u with t(u) >= 1/rank
    recurse on the link of u with the rescaled cover, keeping u itself.
    The output is a fractional cover supported inside support(t).
    """
    if not is_fractional_cover(hypergraph, cover):
        raise ValueError("input is not a fractional cover of the hypergraph")
    kept = _cut_set(set(hypergraph.edges), cover.as_dict())
    vals = cover.as_dict()
    result = FractionalCover.build({v: vals[v] for v in kept if vals.get(v, Fraction(0)) != 0})
    if not is_fractional_cover(hypergraph, result):
        raise InternalInvariantError("finite cut failed to remain a fractional cover")
    if not result.support <= cover.support:
        raise InternalInvariantError("finite cut enlarged the support")
    return result
