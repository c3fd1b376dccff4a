"""Every inequality the theory provides, evaluated exactly on one instance.

Each inequality becomes a BoundClause: either applicable with an exact
verdict, or inapplicable with a machine-readable reason. Right-hand sides
live in Q or in Q adjoined sqrt(2); the latter are compared through exact
sign analysis (squaring with case split on signs), never through floats.

Equality statements are encoded as a single <= clause in the direction
that is not automatic; the reverse inequality holds universally (for
example invariant covers are covers, and closure only adds edges), so the
clause holding is exactly the stated equality.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .closure import (
    check_star_star,
    d_coefficient,
    max_orbit_degree,
    orbit_closure,
)
from .core import Hypergraph, PartProfile, rank
from .covers import min_cover, min_invariant_cover
from .errors import CapExceededError, UncoverableError
from .fractional import tau_star, tau_star_invariant
from .groups import GroupAction, action_preserves_parts, check_action


@dataclass(frozen=True, order=False)
class QSqrt2:
    """An exact element a + b*sqrt(2) of Q[sqrt(2)]."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0) -> "QSqrt2":
        return QSqrt2(Fraction(a), Fraction(b))

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # Mixed signs: compare a^2 with 2 b^2; they cannot be equal for
        # nonzero rationals because sqrt(2) is irrational.
        asq, bsq2 = a * a, 2 * b * b
        if asq == bsq2:
            raise ArithmeticError("rational square equals 2 times a rational square")
        if a > 0:  # b < 0
            return 1 if asq > bsq2 else -1
        return 1 if bsq2 > asq else -1

    def __sub__(self, other: "QSqrt2") -> "QSqrt2":
        return QSqrt2(self.a - other.a, self.b - other.b)

    def __lt__(self, other) -> bool:
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - _coerce(other)).sign() >= 0

    def approx(self) -> float:
        return float(self.a) + float(self.b) * (2.0 ** 0.5)


def _coerce(value) -> QSqrt2:
    if isinstance(value, QSqrt2):
        return value
    return QSqrt2(Fraction(value), Fraction(0))


def compare_exact(lhs: Fraction, rhs: Fraction | QSqrt2, strict: bool) -> bool:
    left = _coerce(lhs)
    right = _coerce(rhs)
    return left < right if strict else left <= right


@dataclass(frozen=True)
class BoundClause:
    name: str
    applicable: bool
    reason: str = ""
    lhs: Fraction | None = None
    rhs: Fraction | QSqrt2 | None = None
    strict_required: bool = False
    holds: bool | None = None

    @property
    def ok(self) -> bool:
        """Inapplicable clauses do not fail a report."""
        return (not self.applicable) or bool(self.holds)


def _clause(
    name: str, lhs: Fraction, rhs: Fraction | QSqrt2, strict: bool = False
) -> BoundClause:
    return BoundClause(
        name=name,
        applicable=True,
        lhs=Fraction(lhs),
        rhs=rhs if isinstance(rhs, QSqrt2) else Fraction(rhs),
        strict_required=strict,
        holds=compare_exact(Fraction(lhs), rhs, strict),
    )


def _skip(name: str, reason: str) -> BoundClause:
    return BoundClause(name=name, applicable=False, reason=reason)


def _predicate(name: str, ok: bool, reason: str = "") -> BoundClause:
    return BoundClause(name=name, applicable=True, reason=reason, holds=ok)


def part_degrees(hypergraph: Hypergraph, profile: PartProfile) -> list[int]:
    """p_i = max over edges of |e intersect V_i| in part order; zeros without edges."""
    profile.validate_for(hypergraph)
    return [
        max((len(e & block) for e in hypergraph.edges), default=0)
        for _, block in profile.parts
    ]


def _part_contains_edge(hypergraph: Hypergraph, profile: PartProfile) -> bool:
    for _, block in profile.parts:
        for e in hypergraph.edges:
            if e and e <= block:
                return True
    return False


def _ahk_clauses(
    prefix: str,
    ratio: Fraction,
    r: int,
    degrees: list[int],
    no_part_owns_edge: bool,
    d_factor: Fraction,
) -> list[BoundClause]:
    """Items a, b, c with the given left-hand ratio and multiplier d."""
    k = len(degrees)
    total = sum(degrees)
    clauses = []

    rhs_a = d_factor * max([Fraction(p) for p in degrees] + [Fraction(total, 2)])
    clauses.append(_clause(f"{prefix}_a", ratio, rhs_a, strict=total >= 3))

    if not no_part_owns_edge:
        clauses.append(_skip(f"{prefix}_b", "some part contains an edge"))
    elif k < r:
        clauses.append(_clause(f"{prefix}_b", ratio, d_factor * (r - 1), strict=True))
    else:
        clauses.append(_clause(f"{prefix}_b", ratio, d_factor * Fraction(r * (k - 1), k)))

    if any(p != 1 for p in degrees):
        clauses.append(_skip(f"{prefix}_c", "not all part degrees equal 1"))
    elif k >= (r - 1) * r:
        clauses.append(_clause(f"{prefix}_c", ratio, Fraction(r * (k - r + 1), k)))
    else:
        rhs_c = QSqrt2(Fraction(r * k, k + r) + 3, Fraction(-2))
        clauses.append(_clause(f"{prefix}_c", ratio, rhs_c))
    return clauses


def ahk_report(hypergraph: Hypergraph, profile: PartProfile) -> list[BoundClause]:
    """The non-symmetric multipartite bounds for tau / tau*."""
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    degrees = part_degrees(hypergraph, profile)
    r = rank(hypergraph)
    if not hypergraph.edges:
        return [
            _skip(name, "no edges: the cover ratio is undefined")
            for name in ("lovasz", "ahk_a", "ahk_b", "ahk_c")
        ]
    tau = min_cover(hypergraph).size
    star = tau_star(hypergraph).optimum
    ratio = Fraction(tau) / star
    clauses = []
    if r >= 2 and profile.k == r and all(p <= 1 for p in degrees):
        clauses.append(_clause("lovasz", ratio, Fraction(r, 2)))
    else:
        clauses.append(
            _skip("lovasz", "requires rank >= 2 and a rank-partite partition (k == rank, all p_i <= 1)")
        )
    clauses.extend(
        _ahk_clauses(
            "ahk", ratio, r, degrees, not _part_contains_edge(hypergraph, profile), Fraction(1)
        )
    )
    return clauses


def symmetric_report(
    hypergraph: Hypergraph, profile: PartProfile, action: GroupAction
) -> list[BoundClause]:
    """The invariant-cover analogues, with the symmetry-cost multiplier d."""
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    from .errors import InvalidActionError

    if not check_action(hypergraph, action):
        raise InvalidActionError("a generator is not an automorphism of the hypergraph")
    preserved = action_preserves_parts(action, profile)
    degrees = part_degrees(hypergraph, profile)
    r = rank(hypergraph)
    k = profile.k

    if not hypergraph.edges:
        names = [
            "kl21", "sym_lovasz", "dm_bipartite",
            "sym_ahk_a", "sym_ahk_a_tau", "sym_ahk_b", "sym_ahk_b_tau",
            "sym_ahk_c", "sym_ahk_c_tau",
        ]
        out = [_clause("kl21", Fraction(0), Fraction(0))]
        out += [_skip(n, "no edges: the cover ratio is undefined") for n in names[1:]]
        return out

    tau = min_cover(hypergraph).size
    star = tau_star(hypergraph).optimum
    tau_g = min_invariant_cover(hypergraph, action).size
    d = d_coefficient(hypergraph, action).value
    ratio_star = Fraction(tau_g) / star
    ratio_tau = Fraction(tau_g, tau)

    clauses = [_clause("kl21", Fraction(tau_g), Fraction(tau * r))]

    if not preserved:
        part_names = [
            "sym_lovasz", "dm_bipartite",
            "sym_ahk_a", "sym_ahk_a_tau", "sym_ahk_b", "sym_ahk_b_tau",
            "sym_ahk_c", "sym_ahk_c_tau",
        ]
        clauses += [_skip(n, "the action does not preserve the parts") for n in part_names]
        return clauses

    if r >= 2 and k == r and all(p <= 1 for p in degrees):
        clauses.append(_clause("sym_lovasz", ratio_tau, Fraction(r, 2), strict=r >= 3))
    else:
        clauses.append(
            _skip("sym_lovasz", "requires rank >= 2 and a rank-partite partition (k == rank, all p_i <= 1)")
        )

    if k == 2 and degrees == [1, 1]:
        clauses.append(_clause("dm_bipartite", Fraction(tau_g), Fraction(tau)))
    else:
        clauses.append(_skip("dm_bipartite", "requires two parts with p_1 = p_2 = 1"))

    no_owned = not _part_contains_edge(hypergraph, profile)
    item_c_applicable = all(p == 1 for p in degrees)
    if item_c_applicable and d != 1:
        # The item-c hypotheses force d = 1 for part-preserving actions;
        # anything else is flagged as a failed clause, not assumed away.
        clauses.append(
            BoundClause(
                name="sym_ahk_d_is_one",
                applicable=True,
                reason="all p_i = 1 with a part-preserving action must give d = 1",
                lhs=d,
                rhs=Fraction(1),
                holds=False,
            )
        )
    # Item c inside _ahk_clauses carries no d factor by construction: its
    # hypotheses force d = 1 (asserted above).
    for suffix, ratio in (("", ratio_star), ("_tau", ratio_tau)):
        for clause in _ahk_clauses("sym_ahk", ratio, r, degrees, no_owned, d):
            clauses.append(replace(clause, name=clause.name + suffix))
    return clauses


@dataclass(frozen=True)
class Quantities:
    tau: int | None = None
    tau_star: Fraction | None = None
    tau_g: int | None = None
    tau_g_star: Fraction | None = None
    rank: int | None = None
    k: int | None = None
    p: tuple[int, ...] | None = None
    d: Fraction | None = None


@dataclass(frozen=True)
class BoundsReport:
    quantities: Quantities
    clauses: tuple[BoundClause, ...]
    uncoverable: bool = False
    action_valid: bool = True
    parts_preserved: bool = True
    closure_capped: bool = False

    @property
    def passed(self) -> bool:
        return (
            not self.uncoverable
            and self.action_valid
            and all(c.ok for c in self.clauses)
        )

    def clause(self, name: str) -> BoundClause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_all(
    hypergraph: Hypergraph,
    profile: PartProfile | None = None,
    action: GroupAction | None = None,
    closure_cap: int = 100_000,
) -> BoundsReport:
    """Compute every quantity and evaluate every applicable inequality.

    Never raises on instance defects: an empty edge or a non-automorphism
    generator turns into a failed report instead.
    """
    profile = profile if profile is not None else PartProfile.trivial(hypergraph)
    action = action if action is not None else GroupAction.trivial(hypergraph.vertices)

    if hypergraph.uncoverable:
        return BoundsReport(
            quantities=Quantities(rank=rank(hypergraph), k=profile.k),
            clauses=(_predicate("coverable", False, "empty edge present"),),
            uncoverable=True,
        )
    if not check_action(hypergraph, action):
        return BoundsReport(
            quantities=Quantities(rank=rank(hypergraph), k=profile.k),
            clauses=(
                _predicate("action_automorphisms", False, "a generator is not an automorphism"),
            ),
            action_valid=False,
        )

    degrees = part_degrees(hypergraph, profile)
    r = rank(hypergraph)
    tau = min_cover(hypergraph).size
    star_result = tau_star(hypergraph)
    star = star_result.optimum
    tau_g = min_invariant_cover(hypergraph, action).size
    star_g = tau_star_invariant(hypergraph, action).optimum
    d = d_coefficient(hypergraph, action).value
    preserved = action_preserves_parts(action, profile)

    quantities = Quantities(
        tau=tau, tau_star=star, tau_g=tau_g, tau_g_star=star_g,
        rank=r, k=profile.k, p=tuple(degrees), d=d,
    )

    clauses: list[BoundClause] = [
        _clause("tau_star_le_tau", star, Fraction(tau)),
        _clause("tau_le_tau_g", Fraction(tau), Fraction(tau_g)),
        # Reverse direction is automatic: invariant fractional covers are
        # fractional covers, so <= here is the equality theorem.
        _clause("invariant_fractional_equality", star_g, star),
    ]
    clauses += ahk_report(hypergraph, profile)
    clauses += symmetric_report(hypergraph, profile, action)

    closure_capped = False
    try:
        closure = orbit_closure(hypergraph, action, cap=closure_cap)
    except CapExceededError as exc:
        closure_capped = True
        clauses.append(_skip("closure_chain", f"closure cap exceeded: {exc}"))
    else:
        closed = closure.closed
        cover_bar = min_cover(closed)
        tau_bar = cover_bar.size
        tau_g_bar = min_invariant_cover(closed, action).size
        star_bar = tau_star(closed).optimum
        star_g_bar = tau_star_invariant(closed, action).optimum
        hull = [o for o in action.orbit_partition if o & cover_bar.witness]
        union = frozenset().union(*hull) if hull else frozenset()
        clauses += [
            _clause("closure_tau_monotone", Fraction(tau), Fraction(tau_bar)),
            # tau_G(closure) >= tau_G(source) is automatic (more edges).
            _clause("closure_invariant_cover_equal", Fraction(tau_g_bar), Fraction(tau_g)),
            _clause("closure_bound", Fraction(len(union)), d * tau_bar),
            # Fractional chain: each reverse direction is automatic.
            _clause("closure_tau_star_equal", star_bar, star),
            _clause("closure_invariant_fractional_equal", star_g_bar, star_g),
            _predicate(
                "closure_star_star",
                check_star_star(closed, cover_bar.witness, action),
            ),
            _predicate(
                "closure_part_degrees_equal",
                part_degrees(closed, profile) == degrees,
            ),
            _predicate(
                "closure_orbit_degrees_equal",
                all(
                    max_orbit_degree(hypergraph.edges, o)
                    == max_orbit_degree(closed.edges, o)
                    for o in action.orbit_partition
                ),
            ),
        ]

    return BoundsReport(
        quantities=quantities,
        clauses=tuple(clauses),
        parts_preserved=preserved,
        closure_capped=closure_capped,
    )
