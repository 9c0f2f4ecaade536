"""The closed-form bound catalog for codes with locality, plus an aggregator.

Every bound is evaluated with exact integer or rational arithmetic; upper
bounds in k or d are produced by exact feasibility search, never by floating
division, so table cells at tight thresholds come out right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .codes import DEFAULT_BUDGET, LinearCode
from .combinat import ceil_div
from .errors import PreconditionError
from .gf import factor_prime_power
from .kopt import KoptProvider
from .lrclp import NO_CODE, lp_dimension_bound
from .weights import _as_coord_set


@dataclass(frozen=True)
class CodeParams:
    """A parameter tuple (q, n, k, d, r, delta); k or d may be left open."""

    q: int
    n: int
    k: int | None = None
    d: int | None = None
    r: int | None = None
    delta: int = 2

    def __post_init__(self):
        factor_prime_power(self.q)
        if self.n < 2:
            raise PreconditionError("length must be at least 2")
        if self.k is not None and not 1 <= self.k <= self.n - 1:
            raise PreconditionError(f"dimension {self.k} outside 1..{self.n - 1}")
        if self.d is not None and not 1 <= self.d <= self.n:
            raise PreconditionError(f"distance {self.d} outside 1..{self.n}")
        if self.r is not None and self.r < 1:
            raise PreconditionError("locality must be at least 1")
        if self.delta < 2:
            raise PreconditionError("delta must be at least 2")


@dataclass(frozen=True)
class BoundRecord:
    bound_name: str
    form: str  # "k_upper" | "d_upper" | "n_upper" | "predicate"
    value: object
    applicable: bool
    inputs: dict
    note: str = ""


@dataclass
class BoundReport:
    params: CodeParams
    records: list[BoundRecord] = field(default_factory=list)

    def add(self, record: BoundRecord) -> None:
        self.records.append(record)

    def min_of(self, form: str):
        vals = [
            r.value
            for r in self.records
            if r.applicable and r.form == form and isinstance(r.value, int)
        ]
        return min(vals) if vals else None

    def optimal_excluded(self) -> tuple[bool, list[str]]:
        reasons = [
            f"{r.bound_name}: {r.note}" if r.note else r.bound_name
            for r in self.records
            if r.applicable and r.form == "predicate" and r.value is False
        ]
        return bool(reasons), reasons


def generalized_singleton_d_upper(q: int, n: int, k: int, r: int) -> int:
    """Largest d with k + ceil(k/r) <= n - d + 2."""
    return n - k - ceil_div(k, r) + 2


def generalized_singleton_k_upper(q: int, n: int, d: int, r: int) -> int:
    """Largest k (possibly 0) satisfying the locality-aware Singleton bound."""
    best = 0
    for k in range(1, n + 1):
        if k + ceil_div(k, r) <= n - d + 2:
            best = k
    return best


def rdelta_singleton_d_upper(q: int, n: int, k: int, r: int, delta: int) -> int:
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1)


def rdelta_singleton_k_upper(q: int, n: int, d: int, r: int, delta: int) -> int:
    best = 0
    for k in range(1, n + 1):
        if d <= n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1):
            best = k
    return best


def shortening_k_upper(
    q: int, n: int, d: int, r: int, provider: KoptProvider, delta: int = 2
) -> int:
    """min over t >= 0 of r*t + k_opt(n - t*(r + delta - 1), d).

    Lengths below d contribute k_opt = 0 (a real candidate: t shortenings
    leave a length there, so k <= r*t); non-positive lengths end the range.
    """
    step = r + delta - 1
    best = None
    t = 0
    while True:
        length = n - t * step
        if length <= 0:
            break
        if best is not None and r * t >= best:
            break  # k_opt >= 0, so later terms cannot beat the current minimum
        value = r * t + provider(q, length, d)
        if best is None or value < best:
            best = value
        t += 1
    return best


def field_aware_singleton_d_upper(q: int, n: int, k: int) -> int:
    """Largest d with d <= n - k + 1 - (d - q)/q, i.e. floor(q(n-k+2)/(q+1))."""
    return (q * (n - k + 2)) // (q + 1)


def dual_distance_check(q: int, n: int, k: int, d: int, r: int, d_dual: int) -> tuple[bool, int]:
    """Feasibility of the dual distance against length, distance and locality.

    Checks d_dual - 1 + (d_dual - q)/q <= n - (d - 2) - ceil(k/r) exactly and
    returns the largest feasible dual distance alongside the verdict.  The
    companion fact d_dual <= r + 1 is enforced as part of the predicate.
    """
    if k < 2:
        raise PreconditionError("dual distance check needs dimension at least 2")
    rhs = n - (d - 2) - ceil_div(k, r)
    holds = Fraction(d_dual - 1) + Fraction(d_dual - q, q) <= rhs and d_dual <= r + 1
    max_feasible = min((q * (rhs + 2)) // (q + 1), r + 1)
    return holds, max_feasible


def wei_monotonicity_check(d_hierarchy, n: int, k: int) -> bool:
    """Strict increase plus d_i <= n - k + i for the whole hierarchy."""
    prev = 0
    for i, d_i in enumerate(d_hierarchy, start=1):
        if d_i <= prev or d_i > n - k + i:
            return False
        prev = d_i
    return True


def wei_ratio_check(d_hierarchy, q: int) -> list[bool]:
    """(q^i - 1) d_{i-1} <= (q^i - q) d_i for each 2 <= i <= k."""
    out = []
    for i in range(2, len(d_hierarchy) + 1):
        lhs = (q**i - 1) * d_hierarchy[i - 2]
        rhs = (q**i - q) * d_hierarchy[i - 1]
        out.append(lhs <= rhs)
    return out


def second_weight_field_bound(d: int, d2: int, q: int) -> tuple[bool, int]:
    """With s = d2 - d > 0, the first distance obeys d <= s*q."""
    if d2 <= d:
        raise PreconditionError("second generalized weight must exceed the first")
    s = d2 - d
    return d <= s * q, s * q


def locality_genweight_upper(n: int, k: int, r: int, i: int) -> int:
    """Upper bound on the i-th generalized weight of a code with locality r."""
    if not 1 <= i <= k:
        raise PreconditionError(f"index {i} outside 1..{k}")
    return n - k + i - (ceil_div(k - (i - 1), r) - 1)


def optimal_second_weight_gap(q: int, n: int, k: int, d: int, r: int) -> tuple[int, int]:
    """Allowed range for d2 of an optimal locality-r code: exact gap 1 unless
    k = 1 (mod r), where the gap may be 2."""
    if k + ceil_div(k, r) != n - d + 2:
        raise PreconditionError("parameters do not sit on the optimality boundary")
    if k % r == 1 % r:
        return d + 1, d + 2
    return d + 1, d + 1


def optimal_field_d_upper(q: int, k: int, r: int) -> int:
    """Distance cap for optimal codes: q, doubled when k = 1 (mod r)."""
    return 2 * q if k % r == 1 % r else q


def locality_singleton_q_d_upper(q: int, n: int, k: int, r: int) -> int:
    """floor of q/(q+1) * (n - k - ceil((k-1)/r) + 3)."""
    return (q * (n - k - ceil_div(k - 1, r) + 3)) // (q + 1)


def optimal_length_upper(q: int, k: int, r: int) -> int | None:
    """Length cap for optimal codes with k <= q; None when not applicable."""
    if k > q:
        return None
    return 4 * q + 1 if k % r == 1 % r else 3 * q


def supported_min_weight_check(
    code: LinearCode, S, budget: int = DEFAULT_BUDGET
) -> tuple[bool, tuple[int, ...] | None, Fraction]:
    """Every nonempty support class C(S, [n]) contains a word of weight at
    most n - k + |S| - (d - q)/q, provided |S| <= k - 1.

    Returns (verdict, minimizing witness, the rational right-hand side).
    """
    s_set = _as_coord_set(code, S)
    if len(s_set) > code.k - 1:
        raise PreconditionError("support set must be smaller than the dimension")
    s_idx = [c - 1 for c in s_set]
    best_word, best_w = None, None
    for word in code.codewords(budget):
        if any(word[c] == 0 for c in s_idx) or not any(word):
            continue
        w = sum(1 for x in word if x)
        if best_w is None or w < best_w:
            best_w, best_word = w, word
    if best_word is None:
        raise PreconditionError("no codeword covers the given support set")
    d = code.min_distance(budget)
    rhs = Fraction(code.n - code.k + len(s_set)) - Fraction(d - code.q, code.q)
    return Fraction(best_w) <= rhs, best_word, rhs


def aggregate_report(
    params: CodeParams,
    provider: KoptProvider | None = None,
    with_lp: bool = False,
    d_dual: int | None = None,
) -> BoundReport:
    """Evaluate every applicable bound for the parameter tuple.

    Individual failures (missing table entries, infeasible subproblems) are
    recorded as non-applicable entries instead of aborting the report.
    """
    p = params
    report = BoundReport(p)
    inputs = {"q": p.q, "n": p.n, "k": p.k, "d": p.d, "r": p.r, "delta": p.delta}

    def record(name, form, value, applicable=True, note=""):
        report.add(BoundRecord(name, form, value, applicable, dict(inputs), note))

    have = lambda *names: all(getattr(p, x) is not None for x in names)

    if have("d", "r"):
        if p.delta == 2:
            record("generalized_singleton", "k_upper",
                   generalized_singleton_k_upper(p.q, p.n, p.d, p.r))
        record("rdelta_singleton", "k_upper",
               rdelta_singleton_k_upper(p.q, p.n, p.d, p.r, p.delta))
        if provider is not None:
            try:
                record("shortening", "k_upper",
                       shortening_k_upper(p.q, p.n, p.d, p.r, provider, p.delta),
                       note=f"k_opt mode: {provider.mode}")
            except KeyError as exc:
                record("shortening", "k_upper", None, applicable=False, note=str(exc))
        if with_lp:
            value = lp_dimension_bound(p.q, p.n, p.d, p.r, p.delta)
            if value == NO_CODE:
                record("locality_lp", "predicate", False,
                       note="LP infeasible: no code meets the constraints")
            else:
                record("locality_lp", "k_upper", value)
    if have("k", "r"):
        if p.delta == 2:
            record("generalized_singleton", "d_upper",
                   generalized_singleton_d_upper(p.q, p.n, p.k, p.r))
        record("rdelta_singleton", "d_upper",
               rdelta_singleton_d_upper(p.q, p.n, p.k, p.r, p.delta))
        record("locality_field_singleton", "d_upper",
               locality_singleton_q_d_upper(p.q, p.n, p.k, p.r))
    if have("k"):
        record("field_aware_singleton", "d_upper",
               field_aware_singleton_d_upper(p.q, p.n, p.k))
    if have("k", "d"):
        ok = p.d <= field_aware_singleton_d_upper(p.q, p.n, p.k)
        record("field_aware_singleton", "predicate", ok,
               note=f"d={p.d} vs cap {field_aware_singleton_d_upper(p.q, p.n, p.k)}")
    if have("k", "d", "r") and d_dual is not None:
        holds, cap = dual_distance_check(p.q, p.n, p.k, p.d, p.r, d_dual)
        record("dual_distance", "predicate", holds, note=f"max feasible dual distance {cap}")
        record("dual_distance", "d_upper", cap, note="bound on the dual distance")

    # Bounds conditioned on optimality of the parameters.
    if have("k", "d", "r") and p.delta == 2:
        on_boundary = p.k + ceil_div(p.k, p.r) == p.n - p.d + 2
        if on_boundary:
            cap = optimal_field_d_upper(p.q, p.k, p.r)
            record("optimal_distance_field_cap", "predicate", p.d <= cap,
                   note=f"optimal code needs d <= {cap}")
            n_cap = optimal_length_upper(p.q, p.k, p.r)
            if n_cap is None:
                record("optimal_length_cap", "predicate", True, applicable=False,
                       note="needs k <= q")
            else:
                record("optimal_length_cap", "predicate", p.n <= n_cap,
                       note=f"optimal code needs n <= {n_cap}")
            lo, hi = optimal_second_weight_gap(p.q, p.n, p.k, p.d, p.r)
            record("optimal_second_weight_gap", "d_upper", hi,
                   note=f"second generalized weight confined to [{lo}, {hi}]")
        else:
            record("optimal_distance_field_cap", "predicate", True, applicable=False,
                   note="parameters do not meet the Singleton-type bound with equality")
    if have("k") and p.k <= p.q < (p.n - 1) / 4:
        record("small_field_long_code", "predicate", False,
               note=f"k <= q < (n-1)/4 rules out an optimal code (q={p.q}, n={p.n})")
    return report


def report_to_dict(report: BoundReport) -> dict:
    p = report.params
    excluded, reasons = report.optimal_excluded()
    return {
        "params": {"q": p.q, "n": p.n, "k": p.k, "d": p.d, "r": p.r, "delta": p.delta},
        "records": [
            {
                "bound": r.bound_name,
                "form": r.form,
                "value": r.value,
                "applicable": r.applicable,
                "note": r.note,
            }
            for r in report.records
        ],
        "min_k_upper": report.min_of("k_upper"),
        "min_d_upper": report.min_of("d_upper"),
        "optimal_excluded": excluded,
        "exclusion_reasons": reasons,
    }


def report_to_text(report: BoundReport) -> str:
    p = report.params
    head = f"bounds for q={p.q} n={p.n} k={p.k} d={p.d} r={p.r} delta={p.delta}"
    lines = [head, "-" * len(head)]
    width = max((len(r.bound_name) for r in report.records), default=10)
    for r in report.records:
        status = "" if r.applicable else "  [not applicable]"
        note = f"  ({r.note})" if r.note else ""
        lines.append(f"{r.bound_name:<{width}}  {r.form:<9} {str(r.value):<6}{status}{note}")
    mk, md = report.min_of("k_upper"), report.min_of("d_upper")
    if mk is not None:
        lines.append(f"{'best k bound':<{width}}  k <= {mk}")
    if md is not None:
        lines.append(f"{'best d bound':<{width}}  d <= {md}")
    excluded, reasons = report.optimal_excluded()
    if excluded:
        lines.append("optimal code EXCLUDED:")
        lines.extend(f"  - {reason}" for reason in reasons)
    return "\n".join(lines)
