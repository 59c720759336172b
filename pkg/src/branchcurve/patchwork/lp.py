"""Exact rational linear feasibility.

Systems have the form ``A_eq x = b_eq, A_ub x <= b_ub`` with free variables.
Two independent solvers are provided: a phase-one simplex with Bland's rule
and Fourier-Motzkin elimination with back substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..algebra.linalg import rref


@dataclass
class LinearSystem:
    nvars: int
    eq: list  # rows (coeffs, rhs)
    ub: list  # rows (coeffs, rhs) meaning coeffs . x <= rhs

    def satisfied_by(self, x: Sequence, strict_ub: bool = False) -> bool:
        for coeffs, rhs in self.eq:
            if sum(c * v for c, v in zip(coeffs, x)) != rhs:
                return False
        for coeffs, rhs in self.ub:
            lhs = sum(c * v for c, v in zip(coeffs, x))
            if lhs > rhs or (strict_ub and lhs == rhs):
                return False
        return True


def _frac_row(row):
    return [Fraction(v) for v in row]


def _reduce(system: LinearSystem):
    """Eliminate the equalities.

    Returns None when they are inconsistent, else (free, subst, ineqs):
    the free variable indices, each pivot variable as (coeffs over free,
    constant), and the inequalities rewritten over the free variables.
    """
    n = system.nvars
    if system.eq:
        aug = [_frac_row(c) + [Fraction(r)] for c, r in system.eq]
        rows, pivots = rref(aug)
        if n in pivots:
            return None
    else:
        rows, pivots = [], []
    free = [j for j in range(n) if j not in pivots]
    subst = {p: ({f: -row[f] for f in free if row[f]}, row[n]) for row, p in zip(rows, pivots)}
    position = {f: k for k, f in enumerate(free)}
    ineqs = []
    for coeffs, rhs in system.ub:
        c = [Fraction(0)] * len(free)
        r = Fraction(rhs)
        for j, a in enumerate(coeffs):
            if not a:
                continue
            a = Fraction(a)
            if j in subst:
                lin, const = subst[j]
                for f, v in lin.items():
                    c[position[f]] += a * v
                r -= a * const
            else:
                c[position[j]] += a
        ineqs.append((c, r))
    return free, subst, ineqs


def _lift(n, free, subst, values) -> list:
    x = [Fraction(0)] * n
    for f, v in zip(free, values):
        x[f] = v
    for p, (lin, const) in subst.items():
        x[p] = const + sum(v * x[f] for f, v in lin.items())
    return x


def _phase_one(ineqs: list, k: int) -> Optional[list]:
    """Feasible y for ``c . y <= r`` with y free, or None.

    Columns are y+ and y- (k each), one slack per row and one artificial
    per row with negative right-hand side.  Bland's rule picks the pivots,
    so the method terminates.
    """
    m = len(ineqs)
    if m == 0:
        return [Fraction(0)] * k
    neg_rows = [i for i, (_, r) in enumerate(ineqs) if r < 0]
    width = 2 * k + m
    total = width + len(neg_rows)
    tableau, basis = [], []
    for i, (c, r) in enumerate(ineqs):
        row = [Fraction(0)] * (total + 1)
        sign = -1 if r < 0 else 1
        for j, a in enumerate(c):
            if a:
                row[j] = sign * a
                row[k + j] = -sign * a
        row[2 * k + i] = Fraction(sign)
        row[total] = sign * r
        if r < 0:
            col = width + neg_rows.index(i)
            row[col] = Fraction(1)
            basis.append(col)
        else:
            basis.append(2 * k + i)
        tableau.append(row)
    # reduced costs of the artificial objective
    cost = [Fraction(0)] * (total + 1)
    for i in neg_rows:
        for j in range(width):
            cost[j] -= tableau[i][j]
        cost[total] -= tableau[i][total]
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best, leave = None, None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[total] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise AssertionError("phase one is unbounded")
        piv = tableau[leave][entering]
        pivot_row = [v / piv for v in tableau[leave]]
        tableau[leave] = pivot_row
        nz = [j for j, v in enumerate(pivot_row) if v]
        for i, row in enumerate(tableau):
            f = row[entering]
            if i != leave and f:
                for j in nz:
                    row[j] -= f * pivot_row[j]
        f = cost[entering]
        for j in nz:
            cost[j] -= f * pivot_row[j]
        basis[leave] = entering
    if cost[total] != 0:
        return None
    values = [Fraction(0)] * total
    for i, j in enumerate(basis):
        values[j] = tableau[i][total]
    return [values[j] - values[k + j] for j in range(k)]


def simplex_feasible(system: LinearSystem) -> Optional[list]:
    """A feasible point by the simplex method, or None.  Equalities are eliminated first."""
    reduced = _reduce(system)
    if reduced is None:
        return None
    free, subst, ineqs = reduced
    y = _phase_one(ineqs, len(free))
    if y is None:
        return None
    return _lift(system.nvars, free, subst, y)


def _normalize(coeffs, rhs):
    """Scale an inequality so its first nonzero coefficient has absolute value 1."""
    lead = next((abs(c) for c in coeffs if c), None)
    if lead is None:
        return tuple(coeffs), rhs
    return tuple(c / lead for c in coeffs), rhs / lead


def _substitute_equalities(system: LinearSystem):
    """Solve the equalities one at a time, substituting into everything left.

    Kept separate from the row reduction used by the simplex route so the
    two solvers share no elimination code.  Returns None when inconsistent,
    else (free, steps, ineqs) with ``steps`` in elimination order.
    """
    n = system.nvars
    eqs = [(_frac_row(c), Fraction(r)) for c, r in system.eq]
    ineqs = [(_frac_row(c), Fraction(r)) for c, r in system.ub]
    steps = []
    while eqs:
        c, r = eqs.pop(0)
        p = next((j for j in reversed(range(n)) if c[j]), None)
        if p is None:
            if r:
                return None
            continue
        coeffs = [-v / c[p] for v in c]
        coeffs[p] = Fraction(0)
        const = r / c[p]

        def sub(row, rhs):
            a = row[p]
            if not a:
                return row, rhs
            new = [v + a * k for v, k in zip(row, coeffs)]
            new[p] = Fraction(0)
            return new, rhs - a * const

        eqs = [sub(*e) for e in eqs]
        ineqs = [sub(*e) for e in ineqs]
        steps.append((p, coeffs, const))
    pivots = {p for p, _, _ in steps}
    free = [j for j in range(n) if j not in pivots]
    return free, steps, [([c[j] for j in free], r) for c, r in ineqs]


def fourier_motzkin_feasible(system: LinearSystem) -> Optional[list]:
    """A feasible point by Fourier-Motzkin elimination, or None."""
    reduced = _substitute_equalities(system)
    if reduced is None:
        return None
    free, steps, ineqs = reduced
    k = len(free)
    stages = []
    current = {_normalize(c, r) for c, r in ineqs}
    for var in range(k):
        stages.append(current)
        pos, neg, zero = [], [], []
        for c, r in current:
            (pos if c[var] > 0 else neg if c[var] < 0 else zero).append((c, r))
        nxt = set(zero)
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = cp[var], -cn[var]
                c = tuple(b * x + a * y for x, y in zip(cp, cn))
                nxt.add(_normalize(c, b * rp + a * rn))
        current = nxt
    for c, r in current:
        if r < 0:
            return None

    values = [Fraction(0)] * k
    for var in reversed(range(k)):
        lo, hi = None, None
        for c, r in stages[var]:
            a = c[var]
            if not a:
                continue
            rest = r - sum(c[j] * values[j] for j in range(var + 1, k))
            bound = rest / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                raise AssertionError("back substitution found an empty interval")
            values[var] = (lo + hi) / 2
        elif lo is not None:
            values[var] = lo
        elif hi is not None:
            values[var] = hi
    x = [Fraction(0)] * system.nvars
    for f, v in zip(free, values):
        x[f] = v
    # a pivot only involves variables eliminated after it
    for p, coeffs, const in reversed(steps):
        x[p] = const + sum(c * v for c, v in zip(coeffs, x) if c)
    return x
