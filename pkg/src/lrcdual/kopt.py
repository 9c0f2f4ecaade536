"""Providers for k_opt(q, n, d): the largest dimension of a length-n code with
minimum distance at least d over GF(q).

Three modes:
  exact_table  -- pinned values from published best-known-linear-code tables
                  (plus the closed-form cases below), erroring on a miss;
  delsarte_lp  -- the Delsarte LP upper estimate (valid bound, may overshoot);
  singleton    -- the classical Singleton bound n - d + 1.

Closed forms used in every mode: k_opt = n for d = 1, n - 1 for d = 2 (the
sum-zero code is optimal since only the full space beats it), 1 for d = n,
and 0 for d > n (no nonzero code exists).
"""

from __future__ import annotations

import csv
from importlib import resources

from .combinat import ceil_div
from .errors import PreconditionError
from .lrclp import delsarte_kopt_bound

MODES = ("exact_table", "delsarte_lp", "singleton")


def closed_form_kopt(q: int, n: int, d: int) -> int | None:
    """The (q-independent) cases where k_opt needs no table."""
    if n < 1 or d > n:
        return 0
    if d == 1:
        return n
    if d == 2:
        return n - 1
    if d == n:
        return 1
    return None


def griesmer_max_k(q: int, n: int, d: int) -> int:
    """Largest k whose Griesmer length bound fits inside n (an upper bound)."""
    if d > n or n < 1:
        return 0
    length = 0
    k = 0
    while True:
        length += ceil_div(d, q**k)
        if length > n:
            return k
        k += 1


class KoptProvider:
    """Dispatch for k_opt lookups inside shortening bounds."""

    def __init__(self, mode: str = "exact_table", table: dict | None = None):
        if mode not in MODES:
            raise PreconditionError(f"unknown k_opt mode {mode!r}; pick one of {MODES}")
        self.mode = mode
        self.table = dict(table) if table else {}
        if mode == "exact_table" and table is None:
            self.table = load_kopt_table()
        self._lp_cache: dict[tuple[int, int, int], int] = {}

    def __call__(self, q: int, n: int, d: int) -> int:
        if d < 1:
            raise PreconditionError("distance must be at least 1")
        closed = closed_form_kopt(q, n, d)
        if closed is not None:
            return closed
        if self.mode == "singleton":
            return n - d + 1
        if self.mode == "delsarte_lp":
            key = (q, n, d)
            if key not in self._lp_cache:
                self._lp_cache[key] = delsarte_kopt_bound(q, n, d)
            return self._lp_cache[key]
        try:
            return self.table[(q, n, d)]
        except KeyError:
            raise KeyError(
                f"k_opt table has no entry for q={q}, n={n}, d={d}; "
                "extend the table or use the delsarte_lp / singleton mode"
            ) from None

    def describe(self) -> str:
        if self.mode == "exact_table":
            return f"exact_table ({len(self.table)} pinned entries)"
        return self.mode


def load_kopt_table(path=None) -> dict[tuple[int, int, int], int]:
    """Read a k_opt CSV (columns q,n,d,kopt,source) into a lookup dict."""
    if path is None:
        ref = resources.files("lrcdual.data").joinpath("kopt_table.csv")
        with ref.open("r", encoding="utf-8") as fh:
            return _parse_kopt_csv(fh)
    with open(path, "r", encoding="utf-8") as fh:
        return _parse_kopt_csv(fh)


def _parse_kopt_csv(fh) -> dict[tuple[int, int, int], int]:
    out: dict[tuple[int, int, int], int] = {}
    reader = csv.DictReader(fh)
    for row in reader:
        key = (int(row["q"]), int(row["n"]), int(row["d"]))
        value = int(row["kopt"])
        if key in out and out[key] != value:
            raise ValueError(f"conflicting k_opt entries for {key}")
        out[key] = value
    return out
