"""The two linear programs of the bound machinery.

1. The locality LP: variables a_{ij} stand for refined dual counts W_i^j; a
   dual functional expresses the would-be refined counts of the primal code
   as an affine form in the a_{ij}, and non-negativity of those forms plus the
   locality mass constraint bounds the dual size from below, hence the code
   dimension from above.

2. The classical Delsarte LP on distance distributions, used as a pluggable
   estimate of the largest dimension k_opt(n, d) inside shortening bounds.

Both are solved with the exact rational simplex.  The locality LP is
invariant under permuting the coordinate index, so averaging any feasible
point over coordinates yields a feasible point of the column-sum LP with the
same objective; the two optima therefore coincide and the n-variable
symmetric program is the default solve path (the full n^2-variable program is
kept for cross-checking).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binom, krawtchouk
from .errors import PreconditionError
from .gf import factor_prime_power
from .simplex import EQ, GE, LpProblem, LpSolution, simplex_solve

NO_CODE = float("-inf")  # dimension bound when the LP certifies non-existence


def dual_functional_constant(q: int, n: int, i: int) -> int:
    """Constant term of the dual functional row i (the weight-0 dual word)."""
    return binom(n - 1, i - 1) * (q - 1) ** i


def dual_functional_coefficient(
    q: int, n: int, i: int, l: int, j: int, s: int, j_start: int = 1
) -> Fraction:
    """Coefficient of a_{js} in the dual functional row (i, l).

    The branch depends only on whether s equals l.  ``j_start`` truncates the
    j-range (entries below the dual distance vanish at any genuine table, so
    the default 1 is safe when the dual distance is unknown).
    """
    for name, v in (("i", i), ("l", l), ("j", j), ("s", s)):
        if not 1 <= v <= n:
            raise PreconditionError(f"index {name}={v} outside 1..{n}")
    if j < j_start:
        return Fraction(0)
    return Fraction(q - 1, q) * _functional_inner(q, n, i, j, diagonal=(s == l))


def _functional_inner(q: int, n: int, i: int, j: int, diagonal: bool) -> Fraction:
    total = Fraction(0)
    for t in range(1, i + 1):
        outer = binom(n - t, i - t)
        if outer == 0:
            continue
        if diagonal:
            branch = Fraction(1 - j, j) * binom(n - 1 - j, t - 1) - Fraction(1, q - 1) * binom(
                n - j, t - 1
            )
        else:
            branch = Fraction(1, j) * binom(n - 1 - j, t - 1)
        if branch == 0:
            continue
        term = (q**t) * outer * branch
        total += -term if (i - t) % 2 else term
    return total


@dataclass(frozen=True)
class LrcLpModel:
    """The locality LP for parameters (q, n, d, r, delta), before solving."""

    q: int
    n: int
    d: int
    r: int
    delta: int
    off_diag: tuple[tuple[Fraction, ...], ...]  # [i-1][j-1], s != l branch
    diag: tuple[tuple[Fraction, ...], ...]      # [i-1][j-1], s == l branch

    def var_index(self, i: int, j: int) -> int:
        """Column of a_{ij} in the full program, 1-based indices."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise PreconditionError(f"({i},{j}) outside the variable grid")
        return (i - 1) * self.n + (j - 1)

    def functional_row(self, i: int, l: int) -> list[Fraction]:
        """Dense coefficients of the dual functional (i, l) over all a_{js}."""
        n = self.n
        row = [Fraction(0)] * (n * n)
        for j in range(1, n + 1):
            off = self.off_diag[i - 1][j - 1]
            dia = self.diag[i - 1][j - 1]
            base = (j - 1) * 1  # a_{js} columns: (j-1)*n + (s-1)
            for s in range(1, n + 1):
                row[(j - 1) * n + (s - 1)] = dia if s == l else off
        return row

    def functional_value(self, i: int, l: int, table: dict[tuple[int, int], int]) -> Fraction:
        """Evaluate constant + functional at a concrete table a[(j, s)]."""
        total = Fraction(dual_functional_constant(self.q, self.n, i))
        for (j, s), v in table.items():
            if v:
                coeff = self.diag[i - 1][j - 1] if s == l else self.off_diag[i - 1][j - 1]
                total += coeff * v
        return total


def lrc_lp_model(q: int, n: int, d: int, r: int, delta: int = 2) -> LrcLpModel:
    _validate_params(q, n, d, r, delta)
    off = tuple(
        tuple(Fraction(q - 1, q) * _functional_inner(q, n, i, j, False) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    dia = tuple(
        tuple(Fraction(q - 1, q) * _functional_inner(q, n, i, j, True) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return LrcLpModel(q, n, d, r, delta, off, dia)


def _validate_params(q: int, n: int, d: int, r: int, delta: int) -> None:
    factor_prime_power(q)  # raises if q is not a prime power
    if n < 2:
        raise PreconditionError("length must be at least 2")
    if not 1 <= d <= n:
        raise PreconditionError(f"distance {d} outside 1..{n}")
    if r < 1 or delta < 2:
        raise PreconditionError("need r >= 1 and delta >= 2")


def build_lrc_lp(q: int, n: int, d: int, r: int, delta: int = 2) -> LpProblem:
    """The full locality LP over the n^2 variables a_{ij}.

    Constraints: a_{ij} >= 0; every dual functional non-negative; functionals
    with 1 <= i <= d-1 pinned to zero; per-coordinate low-weight mass at least
    q^(delta-1) - q^(delta-2); a_{1j} = 0.  Objective: minimize
    sum_i (sum_j a_{ij}) / i.
    """
    model = lrc_lp_model(q, n, d, r, delta)
    nv = n * n
    objective = [Fraction(0)] * nv
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            objective[model.var_index(i, j)] = Fraction(1, i)
    constraints = []
    # sign constraints on the variables themselves
    for col in range(nv):
        unit = [Fraction(0)] * nv
        unit[col] = Fraction(1)
        constraints.append((unit, GE, Fraction(0)))
    # dual functionals: zero below the distance, non-negative elsewhere
    for i in range(1, n + 1):
        for l in range(1, n + 1):
            row = model.functional_row(i, l)
            rhs = Fraction(-dual_functional_constant(q, n, i))
            constraints.append((row, EQ if i <= d - 1 else GE, rhs))
    # locality mass per coordinate
    mass_rhs = Fraction(q ** (delta - 1) - q ** (delta - 2))
    top = min(r + delta - 1, n)
    for j in range(1, n + 1):
        row = [Fraction(0)] * nv
        for i in range(1, top + 1):
            row[model.var_index(i, j)] = Fraction(1)
        constraints.append((row, GE, mass_rhs))
    # no weight-1 dual words (non-degeneracy)
    for j in range(1, n + 1):
        row = [Fraction(0)] * nv
        row[model.var_index(1, j)] = Fraction(1)
        constraints.append((row, EQ, Fraction(0)))
    return LpProblem.build(objective, "min", constraints)


def build_lrc_lp_symmetric(q: int, n: int, d: int, r: int, delta: int = 2) -> LpProblem:
    """The column-sum collapse of the full LP: variables b_i = a_{ij} for all j.

    Averaging over coordinate permutations shows this has the same optimum as
    the full program (see the module docstring).
    """
    model = lrc_lp_model(q, n, d, r, delta)
    objective = [Fraction(n, i) for i in range(1, n + 1)]
    constraints = []
    for i in range(1, n + 1):
        row = [
            model.diag[i - 1][j - 1] + (n - 1) * model.off_diag[i - 1][j - 1]
            for j in range(1, n + 1)
        ]
        rhs = Fraction(-dual_functional_constant(q, n, i))
        constraints.append((row, EQ if i <= d - 1 else GE, rhs))
    mass_row = [Fraction(1) if i <= min(r + delta - 1, n) else Fraction(0) for i in range(1, n + 1)]
    constraints.append((mass_row, GE, Fraction(q ** (delta - 1) - q ** (delta - 2))))
    pin_first = [Fraction(1 if i == 1 else 0) for i in range(1, n + 1)]
    constraints.append((pin_first, EQ, Fraction(0)))
    return LpProblem.build(objective, "min", constraints)


def lrc_lp_optimum(q: int, n: int, d: int, r: int, delta: int = 2, full: bool = False) -> LpSolution:
    problem = build_lrc_lp(q, n, d, r, delta) if full else build_lrc_lp_symmetric(q, n, d, r, delta)
    return simplex_solve(problem)


def ceil_log(q: int, threshold: Fraction) -> int:
    """Least m >= 0 with q^m >= threshold, by exact comparison."""
    m = 0
    power = Fraction(1)
    while power < threshold:
        power *= q
        m += 1
    return m


def lp_dimension_bound(q: int, n: int, d: int, r: int, delta: int = 2, full: bool = False):
    """Largest dimension compatible with the locality LP: n - ceil(log_q(1 + mu*)).

    Returns NO_CODE when the LP is infeasible (no code at all fits the
    constraints) and raises on an unbounded model, which the sign and mass
    constraints rule out.
    """
    sol = lrc_lp_optimum(q, n, d, r, delta, full=full)
    if sol.status == "infeasible":
        return NO_CODE
    if sol.status != "optimal":
        raise AssertionError("locality LP cannot be unbounded; model error")
    return n - ceil_log(q, 1 + sol.value)


def delsarte_lp_value(q: int, n: int, d: int) -> Fraction:
    """Optimum of the classical Delsarte LP: max total distance distribution.

    Variables A_i for d <= i <= n (A_0 = 1, A_i = 0 below d), subject to
    non-negativity of every Krawtchouk transform coordinate.
    """
    if not 1 <= d <= n:
        raise PreconditionError(f"distance {d} outside 1..{n}")
    idx = list(range(d, n + 1))
    nv = len(idx)
    if nv == 0:
        return Fraction(1)
    objective = [Fraction(1)] * nv
    constraints = []
    for kk in range(1, n + 1):
        row = [Fraction(krawtchouk(q, n, kk, i)) for i in idx]
        rhs = Fraction(-krawtchouk(q, n, kk, 0))
        constraints.append((row, GE, rhs))
    sol = simplex_solve(LpProblem.build(objective, "max", constraints))
    if sol.status != "optimal":
        raise AssertionError(f"Delsarte LP returned {sol.status}; it is always feasible and bounded")
    return 1 + sol.value


def delsarte_kopt_bound(q: int, n: int, d: int) -> int:
    """Largest k with q^k <= the Delsarte LP optimum."""
    value = delsarte_lp_value(q, n, d)
    k = 0
    power = Fraction(q)
    while power <= value:
        k += 1
        power *= q
    return k
