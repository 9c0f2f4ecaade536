"""Linear codes over GF(q): canonical generator matrices, duals, shortening,
projection, codeword enumeration, and minimum distance.

Coordinate sets at the public interface are 1-based ({1, ..., n}); everything
internal is 0-based.  Generator matrices are kept in reduced row-echelon form
(leftmost pivots, pivot columns fully cleared), which makes code equality a
plain matrix comparison.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .combinat import krawtchouk
from .errors import BudgetExceededError, PreconditionError
from .gf import FieldSpec, field_make

DEFAULT_BUDGET = 2**28


def rref(field: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form over the field; returns (rows, pivot columns).

    Zero rows are dropped, so the result has full rank.
    """
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.inv(mat[r][c])
        if inv != 1:
            mul_inv = field.mul_table[inv]
            mat[r] = [mul_inv[x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mul_f = field.mul_table[factor]
                sub = field.sub
                mat[i] = [sub(x, mul_f[y]) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]], pivots


class MatrixGF:
    """A dense matrix over GF(q) with row-major integer entries."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, entries: list[list[int]], cols: int | None = None):
        self.field = field
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        if self.rows:
            widths = {len(r) for r in self.entries}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.cols = widths.pop()
        else:
            self.cols = 0 if cols is None else cols
        for row in self.entries:
            for x in row:
                field.check_element(x)

    def rref(self) -> tuple["MatrixGF", list[int]]:
        reduced, pivots = rref(self.field, self.entries)
        m = MatrixGF(self.field, reduced, cols=self.cols)
        return m, pivots

    def rank(self) -> int:
        return len(rref(self.field, self.entries)[0])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"MatrixGF({self.rows}x{self.cols} over GF({self.field.q}))"


class LinearCode:
    """A linear code, stored as its canonical RREF generator matrix."""

    __slots__ = ("field", "n", "k", "gen", "pivot_cols")

    def __init__(self, field: FieldSpec, n: int, rows: list[list[int]]):
        if n < 0:
            raise ValueError("length must be non-negative")
        for row in rows:
            if len(row) != n:
                raise ValueError(f"row of length {len(row)} in a length-{n} code")
            for x in row:
                field.check_element(x)
        reduced, pivots = rref(field, rows)
        self.field = field
        self.n = n
        self.k = len(reduced)
        self.gen = MatrixGF(field, reduced, cols=n)
        self.pivot_cols = pivots

    @property
    def q(self) -> int:
        return self.field.q

    def is_nontrivial(self) -> bool:
        return 1 <= self.k <= self.n - 1

    def is_nondegenerate(self) -> bool:
        """True iff no coordinate is zero in every codeword."""
        return all(any(row[j] != 0 for row in self.gen.entries) for j in range(self.n))

    def dual(self) -> "LinearCode":
        """The orthogonal code under the standard dot product, same coordinates.

        Built from the RREF pivot structure: for every non-pivot column c the
        vector with 1 at c and -gen[i][c] at pivot column p_i is orthogonal to
        every generator row, and the n-k such vectors are independent.
        """
        field = self.field
        pivots = self.pivot_cols
        non_pivots = [c for c in range(self.n) if c not in set(pivots)]
        rows = []
        for c in non_pivots:
            v = [0] * self.n
            v[c] = 1
            for i, p in enumerate(pivots):
                v[p] = field.neg(self.gen.entries[i][c])
            rows.append(v)
        return LinearCode(field, self.n, rows)

    def _check_coords(self, coords) -> list[int]:
        out = []
        for c in coords:
            if not isinstance(c, int) or not 1 <= c <= self.n:
                raise PreconditionError(f"coordinate {c!r} outside 1..{self.n}")
            out.append(c - 1)
        return sorted(set(out))

    def shorten_to(self, T) -> "LinearCode":
        """The subcode of words whose support lies inside T, kept at length n."""
        t_set = set(self._check_coords(T))
        outside = [c for c in range(self.n) if c not in t_set]
        field = self.field
        if not self.k:
            return LinearCode(field, self.n, [])
        # Left kernel of the generator restricted to the complement of T:
        # reduce [M | I] and read kernel rows off the identity part.
        aug = [
            [self.gen.entries[i][c] for c in outside] + [int(j == i) for j in range(self.k)]
            for i in range(self.k)
        ]
        reduced, _ = rref(field, aug)
        m = len(outside)
        kernel = [row[m:] for row in reduced if all(x == 0 for x in row[:m])]
        rows = [self._combine(coeffs) for coeffs in kernel]
        return LinearCode(field, self.n, rows)

    def _combine(self, coeffs: list[int]) -> list[int]:
        field = self.field
        word = [0] * self.n
        for c, row in zip(coeffs, self.gen.entries):
            if c:
                mul_c = field.mul_table[c]
                add = field.add_table
                word = [add[w][mul_c[x]] for w, x in zip(word, row)]
        return word

    def project(self, S) -> "LinearCode":
        """The code punctured to the coordinates in S (in ascending order)."""
        s_list = self._check_coords(S)
        if not s_list:
            raise PreconditionError("projection onto the empty set is undefined")
        rows = [[row[c] for c in s_list] for row in self.gen.entries]
        return LinearCode(self.field, len(s_list), rows)

    def codewords(self, budget: int = DEFAULT_BUDGET):
        """Yield all q^k codewords once, in lexicographic message order."""
        if self.q**self.k > budget:
            raise BudgetExceededError(
                f"enumerating q^k = {self.q}^{self.k} codewords exceeds budget {budget}"
            )
        yield from self._span(0, [0] * self.n)

    def _span(self, i: int, word: list[int]):
        if i == self.k:
            yield tuple(word)
            return
        field = self.field
        row = self.gen.entries[i]
        yield from self._span(i + 1, word)
        add = field.add_table
        for c in range(1, self.q):
            mul_c = field.mul_table[c]
            scaled = [add[w][mul_c[x]] for w, x in zip(word, row)]
            yield from self._span(i + 1, scaled)

    def weight_counts(self, budget: int = DEFAULT_BUDGET) -> list[int]:
        """Codeword count per Hamming weight, by full enumeration."""
        counts = [0] * (self.n + 1)
        for word in self.codewords(budget):
            counts[sum(1 for x in word if x)] += 1
        return counts

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        """Minimum nonzero Hamming weight, computed on the smaller of C and its dual."""
        if self.k == 0:
            raise PreconditionError("the zero code has no minimum distance")
        if self.k <= self.n - self.k:
            counts = self.weight_counts(budget)
        else:
            dual_counts = self.dual().weight_counts(budget)
            counts = _transform_weight_counts(dual_counts, self.q, self.n)
        for i in range(1, self.n + 1):
            if counts[i]:
                return i
        raise PreconditionError("no nonzero codeword found")  # unreachable for k >= 1

    def contains(self, word, budget: int = DEFAULT_BUDGET) -> bool:
        """Membership test via rank comparison (budget-free)."""
        if len(word) != self.n:
            return False
        stacked = [list(r) for r in self.gen.entries] + [list(word)]
        return len(rref(self.field, stacked)[0]) == self.k

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen.entries == other.gen.entries
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.n, tuple(tuple(r) for r in self.gen.entries)))

    def __repr__(self) -> str:
        return f"LinearCode[n={self.n}, k={self.k}] over GF({self.q})"


def _transform_weight_counts(counts: list[int], q: int, n: int) -> list[int]:
    """Weight counts of the dual of a code with the given counts (exact)."""
    size = sum(counts)
    out = []
    for j in range(n + 1):
        acc = sum(counts[i] * krawtchouk(q, n, j, i) for i in range(n + 1))
        val = Fraction(acc, size)
        if val.denominator != 1 or val < 0:
            raise ValueError("weight counts are not those of a linear code")
        out.append(int(val))
    return out


def code_from_generator(field: FieldSpec, rows) -> LinearCode:
    """Build the row-space code of the given vectors (dependent rows collapse)."""
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("need at least one row to fix the length")
    n = len(rows[0])
    return LinearCode(field, n, rows)


def simplex_code_7_3() -> LinearCode:
    """The [7,3] binary simplex code; every nonzero word has weight 4."""
    g = [
        [1, 0, 0, 1, 0, 1, 1],
        [0, 1, 0, 1, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 1],
    ]
    return code_from_generator(field_make(2), g)


def repetition_code(q: int, n: int) -> LinearCode:
    return code_from_generator(field_make(q), [[1] * n])


def load_code(path) -> LinearCode:
    """Read a code file; JSON first, falling back to the plain-text format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return _parse_text_code(text)
    if not isinstance(obj, dict):
        raise ValueError("code file must hold a JSON object")
    field = field_make(int(obj["q"]), obj.get("modulus"))
    n = int(obj["n"])
    gen = [[int(x) for x in row] for row in obj["generator"]]
    for row in gen:
        if len(row) != n:
            raise ValueError("generator row length disagrees with n")
    return LinearCode(field, n, gen)


def _parse_text_code(text: str) -> LinearCode:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("text header must be 'q n k'")
    q, n, k = (int(x) for x in header)
    if len(lines) != k + 1:
        raise ValueError(f"expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(x) for x in ln.split()]
        if len(row) != n:
            raise ValueError("generator row length disagrees with n")
        rows.append(row)
    return LinearCode(field_make(q), n, rows)


def save_code(code: LinearCode, path) -> None:
    obj = {
        "q": code.q,
        "modulus": list(code.field.modulus),
        "n": code.n,
        "generator": code.gen.entries,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)
        fh.write("\n")
