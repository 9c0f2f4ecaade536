"""Exact linear programming over the rationals.

A plain dense two-phase tableau simplex with Bland's anti-cycling rule.
Every number is a Fraction, so optima are exact and the returned solution is
re-checked against every constraint before it leaves this module.  Problem
sizes in this package are tiny by LP standards (tens to hundreds of
variables), so clarity beats sparse-matrix cleverness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def check(self, point) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LpProblem:
    num_vars: int
    objective: tuple[Fraction, ...]
    sense: str  # "min" or "max"
    constraints: tuple[Constraint, ...]
    lower_bounds: tuple[Fraction, ...]

    @classmethod
    def build(cls, objective, sense, constraints, lower_bounds=None) -> "LpProblem":
        objective = tuple(_frac(c) for c in objective)
        nv = len(objective)
        if sense not in ("min", "max"):
            raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
        rows = []
        for coeffs, rel, rhs in constraints:
            coeffs = tuple(_frac(c) for c in coeffs)
            if len(coeffs) != nv:
                raise ValueError("constraint width disagrees with objective")
            if rel not in _RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            rows.append(Constraint(coeffs, rel, _frac(rhs)))
        if lower_bounds is None:
            lower_bounds = (Fraction(0),) * nv
        else:
            lower_bounds = tuple(_frac(b) for b in lower_bounds)
            if len(lower_bounds) != nv:
                raise ValueError("lower bound vector width disagrees with objective")
        return cls(nv, objective, sense, tuple(rows), lower_bounds)


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None
    basis: tuple[int, ...] | None = None


def _pivot(tableau, basis, row: int, col: int) -> None:
    piv = tableau[row][col]
    if piv != 1:
        inv = Fraction(1) / piv
        tableau[row] = [x * inv for x in tableau[row]]
    pivot_row = tableau[row]
    for r, line in enumerate(tableau):
        if r == row:
            continue
        factor = line[col]
        if factor:
            tableau[r] = [a - factor * b for a, b in zip(line, pivot_row)]
    basis[row] = col


def _run_simplex(tableau, basis, ncols: int) -> str:
    """Minimize the cost row (last tableau row) with Bland's rule in place.

    Returns "optimal" or "unbounded".  Entering variable: lowest column index
    with negative reduced cost; leaving variable: minimum ratio, ties broken
    by lowest basis variable index.
    """
    m = len(tableau) - 1
    cost = tableau[-1]
    while True:
        col = -1
        for j in range(ncols):
            if cost[j] < 0:
                col = j
                break
        if col < 0:
            return "optimal"
        best_ratio = None
        row = -1
        for i in range(m):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[row]
                ):
                    best_ratio = ratio
                    row = i
        if row < 0:
            return "unbounded"
        _pivot(tableau, basis, row, col)
        cost = tableau[-1]


def simplex_solve(problem: LpProblem) -> LpSolution:
    """Solve exactly; the optimal assignment is verified by substitution."""
    nv = problem.num_vars
    lbs = problem.lower_bounds

    # Work on shifted variables y = x - lb >= 0.
    obj = list(problem.objective)
    if problem.sense == "max":
        obj = [-c for c in obj]
    const_shift = sum((c * lb for c, lb in zip(obj, lbs)), Fraction(0))

    rows = []
    for con in problem.constraints:
        rhs = con.rhs - sum((c * lb for c, lb in zip(con.coeffs, lbs)), Fraction(0))
        coeffs = list(con.coeffs)
        rel = con.relation
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        rows.append((coeffs, rel, rhs))

    m = len(rows)
    nslack = sum(1 for _, rel, _ in rows if rel != EQ)
    nart = sum(1 for _, rel, _ in rows if rel != LE)
    ncols = nv + nslack + nart
    tableau = []
    basis = []
    slack_at = nv
    art_at = nv + nslack
    for coeffs, rel, rhs in rows:
        line = [Fraction(0)] * (ncols + 1)
        for j, c in enumerate(coeffs):
            line[j] = c
        if rel == LE:
            line[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        elif rel == GE:
            line[slack_at] = Fraction(-1)
            slack_at += 1
            line[art_at] = Fraction(1)
            basis.append(art_at)
            art_at += 1
        else:
            line[art_at] = Fraction(1)
            basis.append(art_at)
            art_at += 1
        line[-1] = rhs
        tableau.append(line)

    art_start = nv + nslack

    # Phase 1: minimize the artificial total, priced out over the start basis.
    cost = [Fraction(0)] * (ncols + 1)
    for j in range(art_start, ncols):
        cost[j] = Fraction(1)
    for i, b in enumerate(basis):
        if b >= art_start:
            cost = [a - b_ for a, b_ in zip(cost, tableau[i])]
    tableau.append(cost)
    status = _run_simplex(tableau, basis, ncols)
    if status != "optimal":  # phase 1 is always bounded below by 0
        raise AssertionError("phase 1 reported unbounded")
    if -tableau[-1][-1] > 0:
        return LpSolution(status="infeasible")
    tableau.pop()

    # Drive leftover artificials out of the basis; empty pivot rows are
    # redundant constraints and get dropped.
    keep = []
    for i in range(len(tableau)):
        if basis[i] < art_start:
            keep.append(i)
            continue
        pivot_col = -1
        for j in range(art_start):
            if tableau[i][j] != 0:
                pivot_col = j
                break
        if pivot_col >= 0:
            _pivot(tableau, basis, i, pivot_col)
            keep.append(i)
    if len(keep) != len(tableau):
        tableau = [tableau[i] for i in keep]
        basis = [basis[i] for i in keep]

    # Erase artificial columns so phase 2 cannot re-enter them.
    for line in tableau:
        for j in range(art_start, ncols):
            line[j] = Fraction(0)

    # Phase 2: original costs priced out over the current basis.
    cost = [Fraction(0)] * (ncols + 1)
    for j in range(nv):
        cost[j] = obj[j]
    for i, b in enumerate(basis):
        if cost[b]:
            factor = cost[b]
            cost = [a - factor * t for a, t in zip(cost, tableau[i])]
    tableau.append(cost)
    status = _run_simplex(tableau, basis, ncols)
    if status == "unbounded":
        return LpSolution(status="unbounded")

    shifted = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        shifted[b] = tableau[i][-1]
    assignment = tuple(shifted[j] + lbs[j] for j in range(nv))
    value = sum(
        (c * x for c, x in zip(problem.objective, assignment)), Fraction(0)
    )
    kernel_value = -tableau[-1][-1] + const_shift
    expected = -kernel_value if problem.sense == "max" else kernel_value
    if value != expected:
        raise AssertionError("objective mismatch between tableau and assignment")
    for con in problem.constraints:
        if not con.check(assignment):
            raise AssertionError("optimal point fails exact feasibility recheck")
    for x, lb in zip(assignment, lbs):
        if x < lb:
            raise AssertionError("optimal point violates a lower bound")
    return LpSolution(
        status="optimal", value=value, assignment=assignment, basis=tuple(basis)
    )


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def problem_to_json(problem: LpProblem, names=None) -> str:
    """Serialize for external cross-checking; rationals become "num/den" strings."""
    names = names or [f"x{j}" for j in range(problem.num_vars)]
    obj = {
        "sense": problem.sense,
        "variables": list(names),
        "objective": [_frac_str(c) for c in problem.objective],
        "lower_bounds": [_frac_str(b) for b in problem.lower_bounds],
        "constraints": [
            {
                "coeffs": [_frac_str(c) for c in con.coeffs],
                "relation": con.relation,
                "rhs": _frac_str(con.rhs),
            }
            for con in problem.constraints
        ],
    }
    return json.dumps(obj, indent=2)
