"""Dense two-phase primal simplex over exact rationals.

Solves max c.x subject to A x <= b, x >= 0 with arbitrary-sign b. Every
pivot decision uses Bland's smallest-index rule, which guarantees
termination without cycling; no floating point appears anywhere. The
solver returns the exact optimum and one optimal basic solution; callers
certify optimality by solving the dual problem independently and comparing
the two values exactly.

Scale note: instances here are desk-sized (tens of variables, at most a
few hundred rows), so a dense Fraction tableau is the simplest correct
tool.
"""

from __future__ import annotations

from fractions import Fraction


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def simplex_max(
    objective: list[Fraction], rows: list[tuple[list[Fraction], Fraction]]
) -> tuple[Fraction, list[Fraction]]:
    """Maximize objective.x subject to row.x <= rhs per row and x >= 0."""
    num_vars = len(objective)
    num_rows = len(rows)
    for coeffs, _ in rows:
        if len(coeffs) != num_vars:
            raise ValueError("row length does not match objective length")
    if num_rows == 0:
        if any(c > 0 for c in objective):
            raise Unbounded("no constraints bound a positive objective direction")
        return Fraction(0), [Fraction(0)] * num_vars

    # Equality form: row.x + s_i = b_i with s_i >= 0. Rows with negative rhs
    # are negated (their slack then carries coefficient -1) and receive an
    # artificial variable so the initial basis is feasible.
    slack_base = num_vars
    art_base = num_vars + num_rows
    artificial_rows = [i for i in range(num_rows) if rows[i][1] < 0]
    num_art = len(artificial_rows)
    ncols = num_vars + num_rows + num_art

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    art_index = {}
    for pos, i in enumerate(artificial_rows):
        art_index[i] = art_base + pos
    for i, (coeffs, rhs) in enumerate(rows):
        row = [Fraction(0)] * (ncols + 1)
        sign = Fraction(-1) if rhs < 0 else Fraction(1)
        for j, a in enumerate(coeffs):
            row[j] = sign * a
        row[slack_base + i] = sign
        row[ncols] = sign * rhs
        if rhs < 0:
            row[art_index[i]] = Fraction(1)
            basis.append(art_index[i])
        else:
            basis.append(slack_base + i)
        tableau.append(row)

    def pivot(r: int, q: int) -> None:
        piv = tableau[r][q]
        tableau[r] = [x / piv for x in tableau[r]]
        for i in range(len(tableau)):
            if i != r and tableau[i][q] != 0:
                factor = tableau[i][q]
                tableau[i] = [a - factor * b for a, b in zip(tableau[i], tableau[r])]
        nonlocal obj
        if obj[q] != 0:
            factor = obj[q]
            obj = [a - factor * b for a, b in zip(obj, tableau[r])]
        basis[r] = q

    def canonical_objective(costs: list[Fraction]) -> list[Fraction]:
        row = list(costs) + [Fraction(0)] * (ncols + 1 - len(costs))
        for r, bv in enumerate(basis):
            if row[bv] != 0:
                factor = row[bv]
                row = [a - factor * b for a, b in zip(row, tableau[r])]
        return row

    def run(allowed: int) -> None:
        # Bland's rule: entering = smallest-index column with positive
        # reduced cost; leaving = smallest-basic-index row among ratio minima.
        while True:
            entering = -1
            for j in range(allowed):
                if obj[j] > 0:
                    entering = j
                    break
            if entering < 0:
                return
            leaving = -1
            best_ratio: Fraction | None = None
            for i in range(len(tableau)):
                coeff = tableau[i][entering]
                if coeff > 0:
                    ratio = tableau[i][ncols] / coeff
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = i
            if leaving < 0:
                raise Unbounded("objective unbounded above")
            pivot(leaving, entering)

    if num_art:
        phase1 = [Fraction(0)] * ncols
        for i in artificial_rows:
            phase1[art_index[i]] = Fraction(-1)
        obj = canonical_objective(phase1)
        run(ncols)
        if obj[ncols] != 0:
            raise Infeasible("phase 1 left a positive artificial sum")
        # Drive remaining artificials out of the basis; rows that cannot
        # pivot are redundant equations and are dropped.
        for r in range(len(tableau) - 1, -1, -1):
            if basis[r] >= art_base:
                target = -1
                for j in range(art_base):
                    if tableau[r][j] != 0:
                        target = j
                        break
                if target >= 0:
                    pivot(r, target)
                else:
                    del tableau[r]
                    del basis[r]
        for row in tableau:
            del row[art_base:ncols]
        ncols_new = art_base
        for row in tableau:
            assert len(row) == ncols_new + 1
        ncols = ncols_new

    obj = canonical_objective(list(objective))
    run(num_vars + num_rows)

    solution = [Fraction(0)] * num_vars
    for r, bv in enumerate(basis):
        if bv < num_vars:
            solution[bv] = tableau[r][ncols]
    value = -obj[ncols]
    return value, solution


def lp_min_ge(
    costs: list[Fraction],
    ge_rows: list[tuple[list[Fraction], Fraction]],
    upper_bounds: list[Fraction] | None = None,
) -> tuple[Fraction, list[Fraction]]:
    """Minimize costs.x subject to row.x >= rhs per row, 0 <= x (<= ub)."""
    num_vars = len(costs)
    rows: list[tuple[list[Fraction], Fraction]] = [
        ([-a for a in coeffs], -rhs) for coeffs, rhs in ge_rows
    ]
    if upper_bounds is not None:
        for j, ub in enumerate(upper_bounds):
            unit = [Fraction(0)] * num_vars
            unit[j] = Fraction(1)
            rows.append((unit, ub))
    value, solution = simplex_max([-c for c in costs], rows)
    return -value, solution


def lp_max_le(
    gains: list[Fraction], le_rows: list[tuple[list[Fraction], Fraction]]
) -> tuple[Fraction, list[Fraction]]:
    """Maximize gains.x subject to row.x <= rhs per row and x >= 0."""
    return simplex_max(list(gains), le_rows)
