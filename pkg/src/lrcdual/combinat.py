"""Combinatorial helpers shared across the package.

Binomial coefficients follow the vanishing convention: C(a, b) = 0 whenever
b < 0, a < 0, or b > a.  The long alternating sums in the duality identities
rely on this so that out-of-range terms drop out silently.
"""

from __future__ import annotations

from math import comb


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def krawtchouk(q: int, n: int, k: int, x: int) -> int:
    """K_k(x) = sum_j (-1)^j (q-1)^(k-j) C(x,j) C(n-x,k-j), exact integer."""
    total = 0
    for j in range(0, k + 1):
        term = binom(x, j) * binom(n - x, k - j) * (q - 1) ** (k - j)
        total += -term if j % 2 else term
    return total


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for positive b, exact integer arithmetic."""
    return -(-a // b)


def subsets_of(items, max_size=None):
    """All subsets of the given collection as frozensets, smallest first."""
    from itertools import combinations

    items = sorted(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    for size in range(top + 1):
        for combo in combinations(items, size):
            yield frozenset(combo)
