"""Cross-verification suites: every duality identity against brute-force
enumeration, and every proved predicate against directly computed code data.

Each check counts evaluations and collects mismatch descriptions; exact
arithmetic means any mismatch at all is a bug (in the code or in the data it
was fed), so suites report zero-tolerance verdicts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .bounds import (
    dual_distance_check,
    field_aware_singleton_d_upper,
    locality_genweight_upper,
    second_weight_field_bound,
    supported_min_weight_check,
    wei_monotonicity_check,
    wei_ratio_check,
)
from .codes import LinearCode
from .combinat import binom
from .errors import NoLocalityError
from .identities import (
    binomial_moment,
    binomial_moment_via_dual,
    binomial_transform,
    coordinate_weight_from_dual,
    count_support_between_via_dual,
    invert_binomial_transform,
    refined_weight_from_dual,
    refined_weight_from_dual_level,
)
from .weights import (
    RefinedWeightTable,
    count_support_between,
    downlevel_refined_count,
    generalized_weights,
    locality_profile,
    refined_weight_distribution,
    support_weights,
    weight_distribution,
)


@dataclass
class SuiteResult:
    checks: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    def count(self, name: str, amount: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + amount

    def fail(self, name: str, message: str) -> None:
        self.count(name)
        self.mismatches.append(f"{name}: {message}")

    def merge(self, other: "SuiteResult") -> None:
        for name, amount in other.checks.items():
            self.count(name, amount)
        self.mismatches.extend(other.mismatches)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary_lines(self) -> list[str]:
        lines = [f"{name}: {self.checks[name]} checks" for name in sorted(self.checks)]
        lines.append(f"mismatches: {len(self.mismatches)}")
        lines.extend(f"  {m}" for m in self.mismatches[:50])
        return lines


def _sample_support_sets(rng: random.Random, n: int, max_size: int = 3):
    """Deterministic small family: empty set, two singletons, a pair, a triple."""
    coords = list(range(1, n + 1))
    sets = [frozenset()]
    singles = rng.sample(coords, min(2, n))
    sets.extend(frozenset({c}) for c in singles)
    if n >= 2 and max_size >= 2:
        sets.append(frozenset(rng.sample(coords, 2)))
    if n >= 3 and max_size >= 3:
        sets.append(frozenset(rng.sample(coords, 3)))
    # dedupe, stable order
    seen, out = set(), []
    for s in sets:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def check_identities(code: LinearCode, rng: random.Random) -> SuiteResult:
    """All duality identities on one code, against direct enumeration."""
    res = SuiteResult()
    q, n, k = code.q, code.n, code.k
    dual = code.dual()
    d_dual = dual.min_distance()
    s_sample = _sample_support_sets(rng, n)
    all_subsets = {D for S in s_sample for r_ in range(len(S) + 1) for D in map(frozenset, combinations(sorted(S), r_))}
    dual_table = RefinedWeightTable.for_family(dual, all_subsets)
    direct = {S: refined_weight_distribution(code, S) for S in s_sample}

    for S in s_sample:
        for i in range(n + 1):
            got = refined_weight_from_dual(dual_table, q, k, n, S, i)
            if got != direct[S][i]:
                res.fail("refined_from_dual", f"n={n} k={k} q={q} S={sorted(S)} i={i}: {got} != {direct[S][i]}")
            else:
                res.count("refined_from_dual")
        # binomial moments, both sides
        for t in range(len(S), n + 1):
            lhs = binomial_moment(direct[S], len(S), t)
            rhs = binomial_moment_via_dual(dual_table, q, k, n, S, t)
            if lhs != rhs:
                res.fail("binomial_moment", f"S={sorted(S)} t={t}: {lhs} != {rhs}")
            else:
                res.count("binomial_moment")

    # level-table route, valid while |S| <= dual distance
    for size in (0, 1, 2):
        if size > d_dual:
            continue
        level = RefinedWeightTable.for_level(dual, size)
        for S in s_sample:
            if len(S) != size:
                continue
            for i in range(n + 1):
                got = refined_weight_from_dual_level(level, q, k, n, d_dual, S, i)
                if got != direct[S][i]:
                    res.fail("refined_from_dual_level", f"S={sorted(S)} i={i}: {got} != {direct[S][i]}")
                else:
                    res.count("refined_from_dual_level")

    # single-coordinate identity on two sampled coordinates
    singleton_table = RefinedWeightTable.singletons(dual)
    for l in rng.sample(range(1, n + 1), min(2, n)):
        direct_l = refined_weight_distribution(code, {l})
        for i in range(n + 1):
            got = coordinate_weight_from_dual(singleton_table, q, k, n, d_dual, l, i)
            if got != direct_l[i]:
                res.fail("coordinate_from_dual", f"l={l} i={i}: {got} != {direct_l[i]}")
            else:
                res.count("coordinate_from_dual")

    # sandwich counts via dual shortenings
    coords = list(range(1, n + 1))
    for _ in range(3):
        t_size = rng.randint(0, n)
        T = frozenset(rng.sample(coords, t_size))
        S = frozenset(rng.sample(sorted(T), rng.randint(0, min(2, len(T))))) if T else frozenset()
        via = count_support_between_via_dual(code, S, T)
        direct_count = count_support_between(code, S, T)
        if via != direct_count:
            res.fail("support_sandwich", f"S={sorted(S)} T={sorted(T)}: {via} != {direct_count}")
        else:
            res.count("support_sandwich")

    # level-collapse identity: level-1 sums recover the plain distribution
    wd_dual = weight_distribution(dual)
    level1 = RefinedWeightTable.for_level(dual, 1)
    for i in range(1, n + 1):
        got = downlevel_refined_count(level1, frozenset(), 1, i) if i >= 1 else None
        if got != wd_dual[i]:
            res.fail("level_collapse", f"i={i}: {got} != {wd_dual[i]}")
        else:
            res.count("level_collapse")

    # weight from coordinate sums: i * W_i = sum_j W_i^j (non-degenerate code)
    primal_singletons = RefinedWeightTable.singletons(code)
    wd = weight_distribution(code)
    for i in range(1, n + 1):
        total = sum(primal_singletons.get({j}, i) for j in range(1, n + 1))
        if total != i * wd[i]:
            res.fail("coordinate_sum", f"i={i}: sum {total} != {i}*{wd[i]}")
        else:
            res.count("coordinate_sum")
    return res


def check_predicates(code: LinearCode, rng: random.Random) -> SuiteResult:
    """Proved facts that must hold on every non-degenerate non-trivial code."""
    res = SuiteResult()
    q, n, k = code.q, code.n, code.k
    d = code.min_distance()
    label = f"[{n},{k}]q{q}"

    if d > field_aware_singleton_d_upper(q, n, k):
        res.fail("field_aware_singleton", f"{label}: d={d} beats the cap")
    else:
        res.count("field_aware_singleton")

    hier = generalized_weights(code)  # raises if the dual-defect route disagrees
    res.count("hierarchy_duality", k)
    dual_hier = generalized_weights(code.dual())
    res.count("hierarchy_duality", n - k)

    if not wei_monotonicity_check(hier.d, n, k):
        res.fail("wei_monotonicity", f"{label}: {hier.d}")
    else:
        res.count("wei_monotonicity")
    if not all(wei_ratio_check(hier.d, q)):
        res.fail("wei_ratio", f"{label}: {hier.d}")
    else:
        res.count("wei_ratio", max(k - 1, 0))

    if k >= 2:
        holds, cap = second_weight_field_bound(hier.d[0], hier.d[1], q)
        if not holds:
            res.fail("second_weight_field", f"{label}: d={hier.d[0]} d2={hier.d[1]} cap={cap}")
        else:
            res.count("second_weight_field")

    try:
        profile = locality_profile(code)
        r = profile.r_min
    except NoLocalityError:
        profile = None
        r = None
    if r is not None:
        for i in range(1, k + 1):
            if hier.d[i - 1] > locality_genweight_upper(n, k, r, i):
                res.fail("locality_genweight", f"{label} r={r} i={i}: d_i={hier.d[i - 1]}")
            else:
                res.count("locality_genweight")
        if k >= 2:
            d_dual = code.dual().min_distance()
            holds, _ = dual_distance_check(q, n, k, d, r, d_dual)
            if not holds:
                res.fail("dual_distance", f"{label} r={r} d_dual={d_dual}")
            else:
                res.count("dual_distance")
        # locality mass: every coordinate covered by enough light dual words
        singles = RefinedWeightTable.singletons(code.dual())
        for j in range(1, n + 1):
            mass = sum(singles.get({j}, i) for i in range(2, min(r + 1, n) + 1))
            if mass < q - 1:
                res.fail("locality_mass", f"{label} r={r} j={j}: mass {mass}")
            else:
                res.count("locality_mass")

    if k >= 2:
        s_size = rng.randint(1, min(2, k - 1))
        S = frozenset(rng.sample(range(1, n + 1), s_size))
        try:
            holds, witness, rhs = supported_min_weight_check(code, S)
            if not holds:
                res.fail("supported_min_weight", f"{label} S={sorted(S)} rhs={rhs}")
            else:
                res.count("supported_min_weight")
        except Exception:
            res.count("supported_min_weight_skipped")
    return res


def run_suites(codes, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    total = SuiteResult()
    for code in codes:
        total.merge(check_identities(code, rng))
        total.merge(check_predicates(code, rng))
    # transform inversion spot checks ride along with the corpus run
    for _ in range(20):
        n = rng.randint(1, 20)
        beta = [Fraction(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(n + 1)]
        if invert_binomial_transform(binomial_transform(beta)) != beta:
            total.fail("transform_roundtrip", f"n={n}")
        else:
            total.count("transform_roundtrip")
    return total
