"""Finite fields GF(p^l) with elements encoded as integer indices.

An element c_0 + c_1 X + ... + c_{l-1} X^{l-1} is stored as the integer
sum(c_i * p**i).  Index 0 is zero and index 1 is one in every field.  All
arithmetic goes through precomputed tables, and the vectorised methods accept
numpy arrays of indices as well as plain ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 16
# Full q x q add/mul tables are kept only for small fields.
_TABLE_ORDER = 1024

# Conway polynomials, little-endian coefficient lists.
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, l) with q = p**l, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    l, r = 0, q
    while r % p == 0:
        r //= p
        l += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, l


# --- polynomials over GF(p): little-endian lists of residues ---------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = [c % p for c in a]
    m = _poly_trim(m)
    inv_lead = pow(m[-1], -1, p)
    while len(_poly_trim(a)) >= len(m):
        a = _poly_trim(a)
        shift = len(a) - len(m)
        f = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
    return _poly_trim(a)


def _monic_polys(p, deg):
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _poly_trim([c % p for c in modulus])
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


@dataclass(frozen=True)
class FieldElement:
    field: "Field"
    index: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands belong to different fields")
            return other.index
        return self.field.element(other).index

    def __add__(self, other):
        return FieldElement(self.field, int(self.field.add(self.index, self._other(other))))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, int(self.field.sub(self.index, self._other(other))))

    def __mul__(self, other):
        return FieldElement(self.field, int(self.field.mul(self.index, self._other(other))))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, int(self.field.div(self.index, self._other(other))))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.index)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inv(self):
        return FieldElement(self.field, int(self.field.inv(self.index)))

    def trace(self):
        return FieldElement(self.field, int(self.field.trace(self.index)))

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"GF({self.field.order})[{self.index}]"


class Field:
    """GF(p^l) over the polynomial basis defined by ``modulus``.

    Immutable after construction.  Two fields compare equal iff they share
    (p, l, modulus).
    """

    def __init__(self, p: int, l: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if l < 1:
            raise ValueError("degree must be >= 1")
        q = p**l
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
        if l == 1:
            if modulus is not None and len(_poly_trim(modulus)) not in (0, 2):
                raise ValueError("prime fields take no modulus of degree != 1")
            modulus = None
        else:
            if modulus is None:
                if (p, l) not in CONWAY:
                    raise ValueError(f"no built-in modulus for q={q}; supply one")
                modulus = CONWAY[p, l]
            modulus = tuple(int(c) % p for c in modulus)
            if len(_poly_trim(modulus)) - 1 != l:
                raise ValueError(f"modulus must have degree {l}")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
            modulus = tuple(_poly_trim(modulus))
        self.p = p
        self.l = l
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- construction --------------------------------------------------------

    def _digits(self, x):
        return [(x // self.p**i) % self.p for i in range(self.l)]

    def _from_digits(self, d):
        return sum(int(c) * self.p**i for i, c in enumerate(d))

    def _poly_mul_index(self, a: int, b: int) -> int:
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.l - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._from_digits(_poly_mod(prod, self.modulus, p))

    def _build_tables(self):
        p, q = self.p, self.q
        idx = np.arange(q, dtype=np.int64)
        self._digit_table = np.stack([(idx // p**i) % p for i in range(self.l)], axis=1)
        self._weights = p ** np.arange(self.l, dtype=np.int64)
        self._neg = ((-self._digit_table) % p) @ self._weights

        if self.l == 1:
            mul_small = lambda a, b: a * b % p  # noqa: E731
        else:
            mul_small = self._poly_mul_index
        gen = self._find_generator(mul_small)
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = mul_small(x, gen)
        exp[q - 1:] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self.generator = gen
        self._exp = exp
        self._log = log
        self._inv = np.zeros(q, dtype=np.int64)
        self._inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]

        self._add_table = self._mul_table = None
        if q <= _TABLE_ORDER:
            a, b = np.meshgrid(idx, idx, indexing="ij")
            self._add_table = self._add_digits(a, b)
            self._mul_table = self._mul_log(a, b)

        tr = np.zeros(q, dtype=np.int64)
        xp = idx.copy()
        for _ in range(self.l):
            tr = self._add_digits(tr, xp)
            xp = self._pow_log(xp, p)
        if np.any(tr >= p):
            raise AssertionError("trace left the prime subfield")
        self._trace = tr

    def _find_generator(self, mul_small) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = [d for d in range(2, q) if (q - 1) % d == 0 and is_prime(d)]
        for g in range(2, q):
            if all(self._slow_pow(g, (q - 1) // f, mul_small) != 1 for f in factors):
                return g
        raise AssertionError("no primitive element found")

    @staticmethod
    def _slow_pow(g, e, mul_small):
        r, b = 1, g
        while e:
            if e & 1:
                r = mul_small(r, b)
            b = mul_small(b, b)
            e >>= 1
        return r

    def _add_digits(self, a, b):
        if self.l == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        da = self._digit_table[a]
        db = self._digit_table[b]
        return ((da + db) % self.p) @ self._weights

    def _mul_log(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        r = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    def _pow_log(self, a, e):
        a = np.asarray(a)
        r = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0 if e > 0 else 1, r)

    # -- public arithmetic on indices (ints or arrays) -----------------------

    @property
    def order(self) -> int:
        return self.q

    @property
    def is_prime(self) -> bool:
        return self.l == 1

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_digits(a, b)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_log(a, b)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def trace(self, a):
        """Absolute trace to GF(p); the result index is the residue itself."""
        return self._trace[a]

    def dot(self, u, v):
        """Inner product over the last axis of two index arrays (broadcasting)."""
        u = np.asarray(u)
        v = np.asarray(v)
        prod = self.mul(u, v)
        acc = prod[..., 0]
        for i in range(1, prod.shape[-1]):
            acc = self.add(acc, prod[..., i])
        return acc

    def scale(self, c, v):
        return self.mul(c, np.asarray(v))

    def element(self, i) -> FieldElement:
        i = int(i)
        if not 0 <= i < self.q:
            raise ValueError(f"element {i} out of range for GF({self.q})")
        return FieldElement(self, i)

    __call__ = element

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    def coefficients(self, i: int) -> list[int]:
        return [int(c) for c in self._digit_table[i]]

    # -- identity -------------------------------------------------------------

    def _key(self):
        return (self.p, self.l, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.l == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.l}, modulus={list(self.modulus)})"


_FIELDS: dict = {}


def field_new(p: int, l: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Construct (or fetch a cached copy of) GF(p^l)."""
    key = (p, l, None if modulus is None else tuple(modulus))
    if key not in _FIELDS:
        _FIELDS[key] = Field(p, l, modulus)
    return _FIELDS[key]


def gf(q: int, modulus: Sequence[int] | None = None) -> Field:
    p, l = prime_power(q)
    return field_new(p, l, modulus)


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    if op in ("neg", "inv"):
        return -a if op == "neg" else a.inv()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.field != b.field:
        raise ValueError("operands belong to different fields")
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](b)
