"""Seeded pseudo-random code corpus for the oracle and predicate suites.

Generation is deterministic for a given seed and parameter box: the suite in
CI must be byte-reproducible.  Only non-degenerate, non-trivial codes are
kept, since most identities and every locality notion assume them.
"""

from __future__ import annotations

import random

from .codes import LinearCode, code_from_generator
from .gf import field_make


def random_code(rng: random.Random, q: int, n: int, k: int) -> LinearCode:
    field = field_make(q)
    rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
    return code_from_generator(field, rows)


def generate_corpus(
    seed: int,
    count: int,
    qs=(2, 3, 4, 5),
    max_n: int = 12,
    max_k: int = 6,
    min_n: int = 4,
    max_words: int = 20000,
) -> list[LinearCode]:
    """Draw `count` non-degenerate non-trivial codes, deterministically.

    `max_words` caps q^k so enumeration-heavy oracles stay fast.
    """
    rng = random.Random(seed)
    out: list[LinearCode] = []
    while len(out) < count:
        q = rng.choice(list(qs))
        n = rng.randint(min_n, max_n)
        k_cap = min(max_k, n - 1)
        k = rng.randint(1, k_cap)
        if q**k > max_words:
            continue
        code = random_code(rng, q, n, k)
        if code.k != k or not code.is_nontrivial() or not code.is_nondegenerate():
            continue
        out.append(code)
    return out
