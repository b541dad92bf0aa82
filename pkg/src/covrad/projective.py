"""Projective point tables: the columns of the simplex generator G_k.

The points e_1..e_theta are the columns of G_k in recursion order

    G_1 = (1),  G_k = ( 0 .. 0   1 .. 1   ...  a_{q-1}  1 )
                      ( G_{k-1}  G_{k-1}  ...  G_{k-1}  0 )

so every point has its bottom-most nonzero coordinate equal to 1.  The table
also carries the zero pattern NM of the Gram matrix G_k^T G_k, stored
bit-packed, and applies R = (q-1)J - q*NM to integer vectors exactly.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .gf import Field

THETA_BUDGET = 1 << 22
# Dense (unpacked) NM copies are cached below this theta.
_DENSE_THETA = 2048
# Balanced digit base for exact float64 matvecs: theta * 2^23 < 2^53.
_DIGIT_BITS = 23
_CHUNK_ENTRIES = 1 << 22


def theta(q: int, k: int) -> int:
    if q < 2 or k < 1:
        raise ValueError("need q >= 2 and k >= 1")
    return (q**k - 1) // (q - 1)


def simplex_points(q: int, k: int) -> np.ndarray:
    """Columns of G_k as a (theta, k) index array, in recursion order."""
    pts = np.ones((1, 1), dtype=np.int64)
    for d in range(2, k + 1):
        m = len(pts)
        blocks = [np.column_stack([np.full(m, u, dtype=np.int64), pts]) for u in range(q)]
        last = np.zeros((1, d), dtype=np.int64)
        last[0, 0] = 1
        pts = np.vstack(blocks + [last])
    return pts


def lex_code(q: int, vecs) -> np.ndarray:
    """Lexicographic rank of vectors (leftmost coordinate most significant)."""
    vecs = np.asarray(vecs, dtype=np.int64)
    k = vecs.shape[-1]
    w = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return vecs @ w


def lex_vectors(q: int, s: int) -> np.ndarray:
    """All of GF(q)^s as a (q^s, s) array in lexicographic order."""
    idx = np.arange(q**s, dtype=np.int64)
    return np.stack([(idx // q ** (s - 1 - i)) % q for i in range(s)], axis=1)


def canonicalize(field: Field, vecs):
    """Scale rows so the bottom-most nonzero entry is 1.

    Returns (canonical, scalar) with vecs = scalar * canonical.  Zero rows
    raise ValueError.
    """
    vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64))
    nz = vecs != 0
    if not np.all(nz.any(axis=1)):
        raise ValueError("zero vector has no projective point")
    k = vecs.shape[1]
    last = k - 1 - np.argmax(nz[:, ::-1], axis=1)
    lam = vecs[np.arange(len(vecs)), last]
    inv = field.inv(lam)
    return field.mul(inv[:, None], vecs), lam


class ProjectiveTable:
    """Points of PG(k-1, q) with index lookup and the NM / R matrices."""

    def __init__(self, field: Field, k: int, budget: int = THETA_BUDGET):
        if k < 1:
            raise ValueError("dimension must be >= 1")
        q = field.q
        th = theta(q, k)
        if th > budget:
            raise BudgetError(f"theta({q},{k}) = {th} exceeds budget {budget}")
        self.field = field
        self.q = q
        self.k = k
        self.theta = th
        self.points = simplex_points(q, k)
        self.points.setflags(write=False)
        self.codes = lex_code(q, self.points)
        self.index_map = {tuple(int(c) for c in pt): i + 1 for i, pt in enumerate(self.points)}
        self._class_lookup = None
        if q**k <= (1 << 24):
            lookup = np.zeros(q**k, dtype=np.int64)
            lookup[self.codes] = np.arange(1, th + 1)
            self._class_lookup = lookup
        self._nm_bits, self._row_ones = self._build_nm()
        self._dense = None

    def _build_nm(self):
        th = self.theta
        rows = max(1, _CHUNK_ENTRIES // (th * max(self.k, 1)))
        bits = np.empty((th, (th + 7) // 8), dtype=np.uint8)
        ones = np.empty(th, dtype=np.int64)
        pts = self.points
        for start in range(0, th, rows):
            chunk = pts[start:start + rows]
            if self.field.is_prime:
                nz = (chunk @ pts.T) % self.q != 0
            else:
                nz = self.field.dot(chunk[:, None, :], pts[None, :, :]) != 0
            bits[start:start + rows] = np.packbits(nz, axis=1)
            ones[start:start + rows] = nz.sum(axis=1)
        return bits, ones

    # -- matrices --------------------------------------------------------------

    def nm_rows(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        stop = self.theta if stop is None else stop
        return np.unpackbits(self._nm_bits[start:stop], axis=1, count=self.theta)

    @property
    def NM(self) -> np.ndarray:
        return self.nm_rows()

    @property
    def R(self) -> np.ndarray:
        """R = (q-1)J - q*NM, materialised; avoid for large theta."""
        return (self.q - 1) - self.q * self.NM.astype(np.int64)

    def gram_row(self, i: int) -> np.ndarray:
        """Row i (0-based) of M_k = G_k^T G_k as field indices."""
        return self.field.dot(self.points[i][None, :], self.points)

    @property
    def row_ones(self) -> np.ndarray:
        return self._row_ones

    # -- lookups ---------------------------------------------------------------

    def point_index(self, v) -> tuple[int, int]:
        """Return (u, lam) with v = lam * e_u, u 1-based."""
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.k,):
            raise ValueError(f"expected a vector of length {self.k}")
        canon, lam = canonicalize(self.field, v[None, :])
        return self.index_map[tuple(int(c) for c in canon[0])], int(lam[0])

    def class_indices(self, vecs) -> np.ndarray:
        """1-based point index of each nonzero row of ``vecs``."""
        canon, _ = canonicalize(self.field, vecs)
        codes = lex_code(self.q, canon)
        if self._class_lookup is not None:
            return self._class_lookup[codes]
        return np.array([self.index_map[tuple(int(c) for c in row)] for row in canon])

    def class_of_all(self) -> np.ndarray:
        """Point index (0 for the zero vector) of every vector in lex order."""
        if self._class_lookup is None:
            raise BudgetError("q^k too large for a full class map")
        vecs = lex_vectors(self.q, self.k)
        out = np.zeros(len(vecs), dtype=np.int64)
        out[1:] = self.class_indices(vecs[1:])
        return out

    # -- exact products ----------------------------------------------------------

    def _dense_float(self):
        if self._dense is None and self.theta <= _DENSE_THETA:
            self._dense = self.NM.astype(np.float64)
        return self._dense

    def nm_matvec(self, v) -> np.ndarray:
        """Exact NM @ v for an integer vector of any magnitude (object array out)."""
        v = np.asarray(v, dtype=object)
        if v.shape != (self.theta,):
            raise ValueError(f"expected a vector of length {self.theta}")
        digits = _balanced_digits(v)
        D = np.column_stack(digits).astype(np.float64)
        dense = self._dense_float()
        if dense is not None:
            prod = dense @ D
        else:
            prod = np.empty_like(D)
            rows = max(1, _CHUNK_ENTRIES // self.theta)
            for start in range(0, self.theta, rows):
                block = self.nm_rows(start, start + rows).astype(np.float64)
                prod[start:start + rows] = block @ D
        prod = np.rint(prod).astype(np.int64).astype(object)
        out = prod[:, 0]
        for t in range(1, prod.shape[1]):
            out = out + prod[:, t] * (1 << (_DIGIT_BITS * t))
        return out

    def r_matvec(self, v) -> np.ndarray:
        """Exact R @ v computed as (q-1)*sum(v) - q*(NM @ v)."""
        v = np.asarray(v, dtype=object)
        total = sum(v.tolist())
        return (self.q - 1) * total - self.q * self.nm_matvec(v)

    def __repr__(self):
        return f"ProjectiveTable(GF({self.q}), k={self.k}, theta={self.theta})"


def _balanced_digits(v: np.ndarray) -> list[np.ndarray]:
    base = 1 << _DIGIT_BITS
    half = base >> 1
    digits = []
    x = v.copy()
    while True:
        d = (x + half) % base - half
        digits.append(d)
        x = (x - d) // base
        if not any(x.tolist()):
            return digits


@lru_cache(maxsize=12)
def build_table(field: Field, k: int, budget: int = THETA_BUDGET) -> ProjectiveTable:
    return ProjectiveTable(field, k, budget)


def point_index(table: ProjectiveTable, v) -> tuple[int, int]:
    return table.point_index(v)
