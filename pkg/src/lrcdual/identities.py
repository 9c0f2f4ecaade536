"""Duality identities for refined weight distributions.

Every function here evaluates a closed-form expression in exact rational
arithmetic, so agreement with brute-force enumeration can be asserted with
zero tolerance.  Results that are codeword counts are checked to be
non-negative integers before being returned as ints.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .codes import LinearCode
from .combinat import binom, subsets_of
from .errors import InconsistentTableError, PreconditionError
from .weights import RefinedWeightTable, _as_coord_set


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InconsistentTableError(f"{what} evaluated to {value}, not a non-negative integer")
    return int(value)


def count_support_between_via_dual(code: LinearCode, S, T) -> int:
    """|{x in C : S ⊆ σ(x) ⊆ T}| from dimensions of dual shortenings.

    Alternating sum over subsets A of S of |C-dual(T^c ∪ A)| / q^(n-|T|+|A|),
    scaled by |C|.  Must agree with the direct enumeration count.
    """
    s_set = _as_coord_set(code, S)
    t_set = _as_coord_set(code, T)
    if not s_set <= t_set:
        raise PreconditionError("S must be contained in T")
    q, n, k = code.q, code.n, code.k
    dual = code.dual()
    t_comp = frozenset(range(1, n + 1)) - t_set
    total = Fraction(0)
    for a_size in range(len(s_set) + 1):
        for combo in combinations(sorted(s_set), a_size):
            shortened = dual.shorten_to(t_comp | frozenset(combo))
            term = Fraction(q**shortened.k, q ** (n - len(t_set) + a_size))
            total += -term if a_size % 2 else term
    return _as_int(Fraction(q**k) * total, "support-sandwich count via dual")


def binomial_moment(refined: tuple[int, ...], s_size: int, t: int) -> Fraction:
    """sum_i C(n-i, t-i) W_i^S from the refined distribution of the code itself."""
    n = len(refined) - 1
    if not s_size <= t <= n:
        raise PreconditionError(f"need |S| <= t <= n, got t={t}")
    return Fraction(sum(binom(n - i, t - i) * refined[i] for i in range(n + 1)))


def binomial_moment_via_dual(
    dual_table: RefinedWeightTable, q: int, k: int, n: int, S, t: int
) -> Fraction:
    """The dual-side expression for the same binomial moment.

    Needs W_i^D of the dual code for every D ⊆ S.
    """
    s_set = frozenset(S)
    s = len(s_set)
    if not s <= t <= n:
        raise PreconditionError(f"need |S| <= t <= n, got t={t}")
    total = Fraction(0)
    for D in subsets_of(s_set):
        vec = dual_table.vector(D)
        for B_size in range(len(D) + 1):
            ways = binom(len(D), B_size)
            sign = -1 if (len(D) - B_size) % 2 else 1
            coeff = Fraction(sign * ways, (1 - q) ** B_size)
            inner = sum(binom(n - s - i + B_size, t - s) * vec[i] for i in range(n + 1))
            total += coeff * inner
    return _qpow(q, k - n + t - s) * Fraction(q - 1) ** s * total


def _qpow(q: int, e: int) -> Fraction:
    return Fraction(q**e) if e >= 0 else Fraction(1, q**-e)


def binomial_transform(beta) -> list[Fraction]:
    """alpha_t = sum_i C(n-i, t-i) beta_i."""
    n = len(beta) - 1
    return [
        sum((Fraction(beta[i]) * binom(n - i, t - i) for i in range(n + 1)), Fraction(0))
        for t in range(n + 1)
    ]


def invert_binomial_transform(alpha) -> list[Fraction]:
    """beta_i = sum_t (-1)^(i-t) C(n-t, i-t) alpha_t; inverse of the forward map."""
    n = len(alpha) - 1
    out = []
    for i in range(n + 1):
        acc = Fraction(0)
        for t in range(n + 1):
            c = binom(n - t, i - t)
            if c:
                term = Fraction(alpha[t]) * c
                acc += -term if (i - t) % 2 else term
        out.append(acc)
    return out


def refined_weight_from_dual(
    dual_table: RefinedWeightTable, q: int, k: int, n: int, S, i: int
) -> Fraction:
    """W_i^S of the code from the refined distribution of its dual.

    Requires dual counts W_j^D for every D ⊆ S.  The result is exact; use
    refined_weight_from_dual_int to assert integrality.
    """
    s_set = frozenset(S)
    s = len(s_set)
    total = Fraction(0)
    for D in subsets_of(s_set):
        vec = dual_table.vector(D)
        d_size = len(D)
        for B_size in range(d_size + 1):
            ways = binom(d_size, B_size)
            if ways == 0:
                continue
            inv_pow = Fraction(1, (q - 1) ** B_size)
            for t in range(s, n + 1):
                c_out = binom(n - t, i - t)
                if c_out == 0:
                    continue
                inner = sum(binom(n - s - j + B_size, t - s) * vec[j] for j in range(n + 1))
                if inner == 0:
                    continue
                sign = -1 if (i - t + d_size) % 2 else 1
                total += sign * ways * inv_pow * (q**t) * c_out * inner
    return _qpow(q, k - n - s) * Fraction(q - 1) ** s * total


def refined_weight_from_dual_int(
    dual_table: RefinedWeightTable, q: int, k: int, n: int, S, i: int
) -> int:
    return _as_int(refined_weight_from_dual(dual_table, q, k, n, S, i), f"W_{i}^{sorted(set(S))}")


def refined_weight_from_dual_level(
    level_table: RefinedWeightTable, q: int, k: int, n: int, d_dual: int, S, i: int
) -> Fraction:
    """W_i^S of the code from the level-|S| refined distribution of its dual.

    Only valid when |S| <= d_dual; outside that range the level data does not
    determine the answer and this refuses rather than guess.
    """
    s_set = frozenset(S)
    s = len(s_set)
    if s > d_dual:
        raise PreconditionError(
            f"|S| = {s} exceeds the dual minimum distance {d_dual}; "
            "level data does not determine the refined count"
        )
    if not level_table.has_level(s):
        raise PreconditionError(f"table does not hold the complete level {s}")
    constant = Fraction(binom(n - s, i - s)) * _qpow(q, k - n) * (q - 1) ** i
    total = Fraction(0)
    for T, vec in level_table.counts.items():
        if len(T) != s:
            continue
        inter = s_set & T
        for D in subsets_of(inter):
            d_size = len(D)
            for B_size in range(d_size + 1):
                ways = binom(d_size, B_size)
                inv_pow = Fraction(1, (q - 1) ** B_size)
                for t in range(s, n + 1):
                    c_out = binom(n - t, i - t)
                    if c_out == 0:
                        continue
                    acc = Fraction(0)
                    for j in range(d_dual, n + 1):
                        if vec[j] == 0:
                            continue
                        c_in = binom(n - s - j + B_size, t - s)
                        if c_in == 0:
                            continue
                        acc += Fraction(c_in, binom(j - d_size, s - d_size)) * vec[j]
                    if acc == 0:
                        continue
                    sign = -1 if (i - t + d_size) % 2 else 1
                    total += sign * ways * inv_pow * (q**t) * c_out * acc
    return constant + _qpow(q, k - n - s) * Fraction(q - 1) ** s * total


def coordinate_weight_from_dual(
    singleton_table: RefinedWeightTable, q: int, k: int, n: int, d_dual: int, l: int, i: int
) -> Fraction:
    """W_i^{l} of the code from the dual's singleton refined distribution.

    The two coefficient branches distinguish the coordinate l itself from the
    other coordinates.  Valid whenever the code is non-degenerate (d_dual >= 1).
    """
    if d_dual < 1:
        raise PreconditionError("dual minimum distance must be at least 1")
    if not 1 <= l <= n:
        raise PreconditionError(f"coordinate {l} outside 1..{n}")
    constant = Fraction(binom(n - 1, i - 1)) * _qpow(q, k - n) * (q - 1) ** i
    total = Fraction(0)
    for s in range(1, n + 1):
        vec = singleton_table.vector({s})
        for j in range(d_dual, n + 1):
            if vec[j] == 0:
                continue
            for t in range(1, i + 1):
                c_out = binom(n - t, i - t)
                if c_out == 0:
                    continue
                if s == l:
                    factor = Fraction(1 - j, j) * binom(n - 1 - j, t - 1) - Fraction(
                        1, q - 1
                    ) * binom(n - j, t - 1)
                else:
                    factor = Fraction(1, j) * binom(n - 1 - j, t - 1)
                if factor == 0:
                    continue
                sign = -1 if (i - t) % 2 else 1
                total += sign * (q**t) * c_out * factor * vec[j]
    return constant + _qpow(q, k - n - 1) * (q - 1) * total
