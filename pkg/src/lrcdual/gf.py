"""Exact arithmetic in small finite fields GF(q), q = p^m, via lookup tables.

Field elements are plain integers in [0, q-1].  The integer index encodes the
polynomial sum(c_i x^i) through its base-p digits, so for prime fields the
index is just the residue and arithmetic is the usual mod-p arithmetic.
Index 0 is the additive identity and index 1 the multiplicative identity.
"""

from __future__ import annotations

import json

from .errors import FieldRangeError, NotPrimePowerError

MAX_Q = 512

# Fixed modulus polynomials (little-endian coefficients, monic) so that runs
# are reproducible across machines.  Anything else supported gets the
# lexicographically smallest monic irreducible of the right degree.
DEFAULT_MODULI = {
    4: (1, 1, 1),            # x^2 + x + 1
    8: (1, 1, 0, 1),         # x^3 + x + 1
    9: (1, 0, 1),            # x^2 + 1
    16: (1, 1, 0, 0, 1),     # x^4 + x + 1
    25: (1, 1, 1),           # x^2 + x + 1
    27: (1, 2, 0, 1),        # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NotPrimePowerError."""
    if q < 2:
        raise NotPrimePowerError(f"field size must be at least 2, got {q}")
    p = None
    for cand in range(2, q + 1):
        if cand * cand > q and p is None:
            p = q  # q itself is prime
            break
        if q % cand == 0:
            p = cand
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePowerError(f"{q} is not a prime power")
    return p, m


def _poly_trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den must be monic."""
    num = _poly_trim(list(num))
    dd = len(den) - 1
    while len(num) - 1 >= dd:
        shift = len(num) - 1 - dd
        lead = num[-1]
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        _poly_trim(num)
    return num


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every lower-degree monic polynomial over GF(p)."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    if m == 1:
        return True
    if modulus[0] == 0:  # divisible by x
        return False
    for deg in range(1, m // 2 + 1):
        for idx in range(p**deg):
            digits = _int_digits(idx, p, deg) + [1]
            if not _poly_mod(list(modulus), tuple(digits), p):
                return False
    return True


def _int_digits(value: int, p: int, width: int) -> list[int]:
    digits = []
    for _ in range(width):
        digits.append(value % p)
        value //= p
    return digits


def _digits_int(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    q = p**m
    if q in DEFAULT_MODULI:
        return DEFAULT_MODULI[q]
    if m == 1:
        return (0, 1)  # x, by convention; unused for prime fields
    for idx in range(p**m):
        cand = tuple(_int_digits(idx, p, m) + [1])
        if is_irreducible(cand, p):
            return cand
    raise NotPrimePowerError(f"no irreducible polynomial found for GF({q})")


class FieldSpec:
    """Immutable description of GF(q) with fully materialized operation tables."""

    __slots__ = ("q", "p", "m", "modulus", "add_table", "mul_table", "inv_table", "neg_table")

    def __init__(self, q: int, modulus=None):
        if q > MAX_Q:
            raise FieldRangeError(f"field size {q} exceeds supported maximum {MAX_Q}")
        p, m = factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        if modulus is None:
            modulus = _default_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m} over GF({p})")
        if m > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        q, p, m = self.q, self.p, self.m
        digits = [_int_digits(a, p, m) for a in range(q)]

        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = digits[a]
            for b in range(a, q):
                db = digits[b]
                s = _digits_int([(x + y) % p for x, y in zip(da, db)], p)
                add[a][b] = s
                add[b][a] = s
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] = (prod[i + j] + x * y) % p
                rem = _poly_mod(prod, self.modulus, p) if m > 1 else [prod[0] % p]
                rem += [0] * (m - len(rem))
                v = _digits_int(rem[:m], p)
                mul[a][b] = v
                mul[b][a] = v
        self.add_table = add
        self.mul_table = mul

        neg = [0] * q
        for a in range(q):
            row = add[a]
            for b in range(q):
                if row[b] == 0:
                    neg[a] = b
                    break
        self.neg_table = neg

        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            found = False
            for b in range(1, q):
                if row[b] == 1:
                    inv[a] = b
                    found = True
                    break
            if not found:
                raise ValueError(f"element {a} has no inverse; modulus is not irreducible")
        self.inv_table = inv

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element index of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError(f"division by 0 in GF({self.q})")
        return self.mul_table[a][self.inv_table[b]]

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul_table[result][base]
            base = self.mul_table[base][base]
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.q, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m}, modulus={list(self.modulus)})"


_FIELD_CACHE: dict[int, FieldSpec] = {}


def field_make(q: int, modulus=None) -> FieldSpec:
    """Build (or fetch from cache) the GF(q) spec with the default modulus."""
    if modulus is not None:
        return FieldSpec(q, modulus)
    spec = _FIELD_CACHE.get(q)
    if spec is None:
        spec = FieldSpec(q)
        _FIELD_CACHE[q] = spec
    return spec


_OPS = {"add", "sub", "mul", "div", "neg", "inv", "pow"}


def field_eval(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Uniform dispatch onto a FieldSpec operation.

    `b` is a second element for add/sub/mul/div, an integer exponent for pow,
    and ignored for neg/inv.
    """
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    spec.check_element(a)
    if op == "neg":
        return spec.neg(a)
    if op == "inv":
        return spec.inv(a)
    if b is None:
        raise ValueError(f"operation {op!r} needs a second operand")
    if op == "pow":
        return spec.pow(a, b)
    spec.check_element(b)
    return getattr(spec, op)(a, b)


def load_field_config(path) -> FieldSpec:
    """Field override file: {"q": int, "modulus": [c0, c1, ...]} little-endian."""
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    return FieldSpec(int(cfg["q"]), cfg.get("modulus"))
