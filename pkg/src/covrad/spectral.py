"""Exact Vilenkin-Chrestenson / Trace transforms.

Two routes are provided:

* ``transform_full`` works on all q^s points with values in Z[zeta_p], using
  radix-q butterflies along each coordinate (the kernel matrix factors as a
  Kronecker power of the one-coordinate kernel).  A naive kernel-matrix apply
  is kept behind ``naive=True``.
* ``reduced_transform`` works on proportionality-invariant integer functions,
  stored as the value at 0 plus one value per projective point, and costs one
  matvec with R = (q-1)J - q*NM.

The kernel is zeta^Tr(w.x) with zeta a primitive p-th root of unity; for a
prime field the trace is the identity and this is the Vilenkin-Chrestenson
kernel xi^(w.x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetError
from .gf import Field
from .projective import ProjectiveTable, lex_vectors

FULL_BUDGET = 1 << 24


class CyclotomicInteger:
    """Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2).

    zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)), so the
    representation is unique.  For p = 2 this is a plain integer (zeta = -1).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) == p:
            top = coeffs[-1]
            coeffs = [c - top for c in coeffs[:-1]]
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} or {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInteger":
        return cls(p, [n] + [0] * (p - 2))

    @classmethod
    def zeta(cls, p: int, t: int = 1) -> "CyclotomicInteger":
        full = [0] * p
        full[t % p] = 1
        return cls(p, full)

    def _full(self):
        return list(self.coeffs) + [0]

    def _coerce(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInteger.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = [0] * p
        for i, a in enumerate(self._full()):
            if a:
                for j, b in enumerate(other._full()):
                    if b:
                        out[(i + j) % p] += a * b
        return CyclotomicInteger(p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = CyclotomicInteger.from_int(self.p, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __complex__(self):
        z = np.exp(2j * np.pi / self.p)
        return complex(sum(c * z**i for i, c in enumerate(self.coeffs)))

    def __repr__(self):
        if self.is_integer():
            return str(self.coeffs[0])
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"({' + '.join(terms)})_{self.p}"


# --- kernels ------------------------------------------------------------------

def _check_pair(field: Field, w, x):
    w = np.asarray(w, dtype=np.int64).reshape(-1)
    x = np.asarray(x, dtype=np.int64).reshape(-1)
    if w.shape != x.shape:
        raise ValueError("kernel arguments have different lengths")
    return w, x


def kernel_exponent(field: Field, w, x) -> int:
    w, x = _check_pair(field, w, x)
    return int(field.trace(field.dot(w, x)))


def vc_kernel(field: Field, w, x) -> CyclotomicInteger:
    """xi^(w.x) for a prime field."""
    if not field.is_prime:
        raise ValueError("Vilenkin-Chrestenson kernel needs a prime field; use trace_kernel")
    return CyclotomicInteger.zeta(field.p, kernel_exponent(field, w, x))


def trace_kernel(field: Field, w, x) -> CyclotomicInteger:
    """zeta^Tr(w.x), zeta a primitive p-th root of unity."""
    return CyclotomicInteger.zeta(field.p, kernel_exponent(field, w, x))


def kernel_exponents_1d(field: Field) -> np.ndarray:
    a = np.arange(field.q)
    return field.trace(field.mul(a[:, None], a[None, :]))


def kernel_exponents(field: Field, s: int) -> np.ndarray:
    """q^s x q^s matrix of Tr(w.x), rows and columns in lex order."""
    vecs = lex_vectors(field.q, s)
    e1 = kernel_exponents_1d(field)
    out = np.zeros((len(vecs), len(vecs)), dtype=np.int64)
    for i in range(s):
        out += e1[vecs[:, i][:, None], vecs[:, i][None, :]]
    return out % field.p


def kernel_matrix(field: Field, s: int) -> np.ndarray:
    """The transform matrix as an object array of CyclotomicInteger."""
    e = kernel_exponents(field, s)
    p = field.p
    powers = [CyclotomicInteger.zeta(p, t) for t in range(p)]
    out = np.empty(e.shape, dtype=object)
    for t in range(p):
        mask = e == t
        out[mask] = powers[t]
    return out


# --- full domain -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FullSpectrum:
    """Function GF(q)^s -> Z[zeta_p] as a (q^s, p-1) coefficient array.

    Row order is lexicographic over GF(q)^s with elements ordered by index.
    """

    field: Field
    s: int
    coeffs: np.ndarray

    def __post_init__(self):
        q, p = self.field.q, self.field.p
        if self.coeffs.shape != (q**self.s, p - 1):
            raise ValueError(f"expected coefficient array of shape {(q**self.s, p - 1)}")

    @classmethod
    def from_values(cls, field: Field, s: int, values) -> "FullSpectrum":
        """Integer-valued function from a length q^s sequence."""
        values = list(values)
        n = field.q**s
        if len(values) != n:
            raise ValueError(f"expected {n} values, got {len(values)}")
        coeffs = np.zeros((n, field.p - 1), dtype=object)
        coeffs[:, 0] = [int(v) for v in values]
        return cls(field, s, coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i) -> CyclotomicInteger:
        return CyclotomicInteger(self.field.p, self.coeffs[i])

    @property
    def values(self) -> list[CyclotomicInteger]:
        return [self[i] for i in range(len(self))]

    def is_integer(self) -> bool:
        return not np.any(self.coeffs[:, 1:] != 0)

    def integers(self) -> list[int]:
        if not self.is_integer():
            raise ValueError("spectrum has irrational values")
        return [int(c) for c in self.coeffs[:, 0]]

    def __eq__(self, other):
        return (
            isinstance(other, FullSpectrum)
            and self.field == other.field
            and self.s == other.s
            and np.array_equal(self.coeffs, other.coeffs)
        )


def _working_dtype(coeffs: np.ndarray, growth: int):
    bound = max((abs(int(c)) for c in coeffs.ravel()), default=0)
    return np.int64 if bound * growth < (1 << 62) else object


def transform_full(h: FullSpectrum, naive: bool = False, budget: int = FULL_BUDGET) -> FullSpectrum:
    """h_hat(w) = sum_x h(x) zeta^Tr(w.x), exactly."""
    field, s = h.field, h.s
    q, p = field.q, field.p
    if q**s * p > budget:
        raise BudgetError(f"q^s = {q**s} exceeds the full-transform budget")
    # Work in the redundant length-p basis where multiplying by zeta^t is a roll.
    full = np.concatenate([h.coeffs, np.zeros((len(h.coeffs), 1), dtype=h.coeffs.dtype)], axis=1)
    full = full.astype(_working_dtype(h.coeffs, q**s * (p + 1)))
    out = _naive_apply(field, s, full) if naive else _butterfly_apply(field, s, full)
    reduced = out[:, :-1] - out[:, -1:]
    return FullSpectrum(field, s, reduced.astype(object))


def _butterfly_apply(field: Field, s: int, full: np.ndarray) -> np.ndarray:
    q, p = field.q, field.p
    e1 = kernel_exponents_1d(field)
    arr = full.reshape((q,) * s + (p,))
    for axis in range(s):
        a = np.moveaxis(arr, axis, 0)
        rolled = np.stack([np.roll(a, t, axis=-1) for t in range(p)])
        out = np.zeros_like(a)
        for x in range(q):
            out += rolled[e1[:, x], x]
        arr = np.moveaxis(out, 0, axis)
    return arr.reshape(q**s, p)


def _naive_apply(field: Field, s: int, full: np.ndarray) -> np.ndarray:
    e = kernel_exponents(field, s)
    out = np.zeros_like(full)
    for t in range(field.p):
        mask = (e == t).astype(full.dtype)
        out += mask @ np.roll(full, t, axis=-1)
    return out


# --- reduced domain --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ReducedSpectrum:
    """Proportionality-invariant integer function: value at 0 and at e_1..e_theta."""

    table: ProjectiveTable
    at_zero: int
    at_points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.at_points, dtype=object)
        if pts.shape != (self.table.theta,):
            raise ValueError(f"expected {self.table.theta} point values, got {pts.shape}")
        object.__setattr__(self, "at_points", pts)
        object.__setattr__(self, "at_zero", int(self.at_zero))

    @classmethod
    def from_values(cls, table: ProjectiveTable, values) -> "ReducedSpectrum":
        values = list(values)
        return cls(table, values[0], values[1:])

    def values(self) -> list[int]:
        return [self.at_zero] + [int(v) for v in self.at_points]

    def point_list(self) -> list[int]:
        return [int(v) for v in self.at_points]

    def nonzero_points(self) -> np.ndarray:
        return np.array([v != 0 for v in self.at_points.tolist()], dtype=bool)

    def __eq__(self, other):
        return (
            isinstance(other, ReducedSpectrum)
            and self.table is other.table
            and self.values() == other.values()
        )

    def __add__(self, other: "ReducedSpectrum") -> "ReducedSpectrum":
        if other.table is not self.table:
            raise ValueError("spectra live on different tables")
        return ReducedSpectrum(self.table, self.at_zero + other.at_zero, self.at_points + other.at_points)


@dataclass(frozen=True)
class Composition:
    mu: tuple[int, ...]

    def reduced(self) -> tuple[int, ...]:
        """(mu_0 - mu_1, ..., mu_0 - mu_{q-1})."""
        return tuple(self.mu[0] - m for m in self.mu[1:])


def composition(m, v, q: int) -> Composition:
    """mu_u = sum of v_j over positions with m_j = alpha_u."""
    m = np.asarray(m).reshape(-1)
    v = list(v)
    if len(m) != len(v):
        raise ValueError("row and weight vector lengths differ")
    mu = [0] * q
    for mj, vj in zip(m.tolist(), v):
        mu[mj] += int(vj)
    return Composition(tuple(mu))


def reduced_distribution(table: ProjectiveTable, v) -> np.ndarray:
    """r(v) = [(q-1)J - q NM] v, exact."""
    v = np.asarray(list(v), dtype=object)
    if v.shape != (table.theta,):
        raise ValueError(f"expected length {table.theta}, got {v.shape}")
    return table.r_matvec(v)


def reduced_distribution_by_composition(table: ProjectiveTable, v) -> np.ndarray:
    """r(v) as column sums of the reduced compositions of the Gram rows (slow)."""
    v = list(v)
    if len(v) != table.theta:
        raise ValueError(f"expected length {table.theta}, got {len(v)}")
    out = np.empty(table.theta, dtype=object)
    for i in range(table.theta):
        out[i] = sum(composition(table.gram_row(i), v, table.q).reduced())
    return out


def reduced_transform(table: ProjectiveTable, f: ReducedSpectrum) -> ReducedSpectrum:
    """Transform restricted to {0, e_1..e_theta}.

    at_zero  = f(0) + (q-1) * sum_i f(e_i)
    at_points = f(0) + R f(e_.)
    """
    if f.table is not table:
        raise ValueError("spectrum and table do not match")
    total = sum(f.at_points.tolist())
    zero = f.at_zero + (table.q - 1) * total
    pts = f.at_zero + table.r_matvec(f.at_points)
    return ReducedSpectrum(table, zero, pts)


def pointwise_power(f: ReducedSpectrum, j: int) -> ReducedSpectrum:
    if j < 1:
        raise ValueError("power must be >= 1")
    return ReducedSpectrum(f.table, f.at_zero**j, f.at_points**j)


# --- moving between domains ---------------------------------------------------------

def expand(f: ReducedSpectrum) -> FullSpectrum:
    """The full-domain integer function represented by ``f``."""
    table = f.table
    cls = table.class_of_all()
    vals = np.concatenate([[f.at_zero], f.at_points]).astype(object)
    return FullSpectrum.from_values(table.field, table.k, vals[cls])


def restrict(h: FullSpectrum, table: ProjectiveTable) -> ReducedSpectrum:
    """Sample an integer-valued full spectrum at 0 and the table's points."""
    if h.field != table.field or h.s != table.k:
        raise ValueError("spectrum and table do not match")
    vals = h.integers()
    codes = table.codes
    return ReducedSpectrum(table, vals[0], [vals[c] for c in codes])


def is_proportionality_invariant(h: FullSpectrum, table: ProjectiveTable) -> bool:
    cls = table.class_of_all()
    coeffs = h.coeffs
    for u in range(1, table.theta + 1):
        rows = coeffs[cls == u]
        if not np.all(rows == rows[0]):
            return False
    return True


def _point_key(q: int, vec) -> str:
    sep = "" if q <= 10 else ","
    return sep.join(str(int(c)) for c in vec)


def dump_reduced(f: ReducedSpectrum) -> str:
    """One line per domain point: coordinates, then value."""
    q = f.table.q
    lines = [f"{_point_key(q, [0] * f.table.k)} {f.at_zero}"]
    for pt, val in zip(f.table.points, f.at_points.tolist()):
        lines.append(f"{_point_key(q, pt)} {val}")
    return "\n".join(lines) + "\n"


def dump_full(h: FullSpectrum) -> str:
    q = h.field.q
    lines = []
    for vec, i in zip(lex_vectors(q, h.s), range(len(h))):
        lines.append(f"{_point_key(q, vec)} {h[i]!r}")
    return "\n".join(lines) + "\n"
