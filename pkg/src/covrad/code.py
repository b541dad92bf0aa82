"""Linear codes over GF(q) and the exhaustive oracles used to check the transforms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BudgetError
from .gf import Field
from .projective import ProjectiveTable, build_table, lex_code, lex_vectors
from .spectral import ReducedSpectrum

ORACLE_BUDGET = 1 << 24
_CHUNK_ENTRIES = 1 << 22


# --- linear algebra over the field ----------------------------------------------

def matmul(field: Field, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if field.is_prime:
        return (A @ B) % field.p
    return field.dot(A[:, None, :], B.T[None, :, :])


def rref(field: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        R[[r, i]] = R[[i, r]]
        R[r] = field.mul(field.inv(R[r, c]), R[r])
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = field.sub(R[i], field.mul(R[i, c], R[r]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: Field, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def nullspace(field: Field, M, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}, built in the original coordinates.

    Free column f contributes the row with 1 at f and -R[i, f] at pivot i, so
    no coordinate permutation is ever needed.
    """
    M = np.asarray(M, dtype=np.int64)
    if n is None:
        n = M.shape[1]
    if M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(field, M)
    free = [c for c in range(n) if c not in pivots]
    out = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        out[row, f] = 1
        for i, pc in enumerate(pivots):
            out[row, pc] = field.neg(R[i, f])
    return out


# --- codes ------------------------------------------------------------------------

class LinearCode:
    """An [n, k]_q code given by a generator and/or a parity-check matrix."""

    def __init__(self, field: Field, generator=None, parity=None, n: int | None = None):
        if generator is None and parity is None:
            raise ValueError("need a generator or a parity-check matrix")
        G = None if generator is None else _as_matrix(field, generator, n)
        H = None if parity is None else _as_matrix(field, parity, n)
        lengths = {m.shape[1] for m in (G, H) if m is not None and m.shape[0] > 0}
        if n is None:
            if not lengths:
                raise ValueError("length is ambiguous; pass n")
            n = lengths.pop()
        if any(L != n for L in lengths):
            raise ValueError("matrix widths disagree with the code length")
        if G is not None:
            G = G.reshape(-1, n)
            if rank(field, G) != len(G):
                raise ValueError("generator matrix is not of full row rank")
        if H is not None:
            H = H.reshape(-1, n)
            if rank(field, H) != len(H):
                raise ValueError("parity-check matrix is not of full row rank")
        if G is not None and H is not None:
            if len(G) + len(H) != n:
                raise ValueError("generator and parity-check dimensions do not add up to n")
            if len(G) and len(H) and np.any(matmul(field, H, G.T)):
                raise ValueError("parity-check matrix does not annihilate the generator")
        self.field = field
        self.n = n
        self.k = len(G) if G is not None else n - len(H)
        self.generator = G
        self.parity = H
        for m in (G, H):
            if m is not None:
                m.setflags(write=False)

    @classmethod
    def from_generator(cls, field: Field, G, n: int | None = None) -> "LinearCode":
        return cls(field, generator=G, n=n)

    @classmethod
    def from_parity(cls, field: Field, H, n: int | None = None) -> "LinearCode":
        return cls(field, parity=H, n=n)

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def generator_matrix(self) -> np.ndarray:
        if self.generator is not None:
            return self.generator
        return nullspace(self.field, self.parity, self.n)

    def parity_matrix(self) -> np.ndarray:
        if self.parity is not None:
            return self.parity
        return nullspace(self.field, self.generator, self.n)

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        same = lambda a, b: (a is None) == (b is None) and (a is None or np.array_equal(a, b))  # noqa: E731
        return (
            self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and same(self.generator, other.generator)
            and same(self.parity, other.parity)
        )

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}]_{self.field.q})"


def _as_matrix(field: Field, M, n):
    M = np.array(M, dtype=np.int64)
    if M.ndim == 1 and M.size == 0:
        M = M.reshape(0, n or 0)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if np.any((M < 0) | (M >= field.q)):
        raise ValueError(f"element out of range for GF({field.q})")
    return M


def parity_from_generator(code: LinearCode) -> LinearCode:
    """The same code with a parity-check matrix attached (H G^T = 0, full rank)."""
    if code.generator is None:
        raise ValueError("code has no generator matrix")
    H = nullspace(code.field, code.generator, code.n)
    return LinearCode(code.field, generator=code.generator, parity=H, n=code.n)


def generator_from_parity(code: LinearCode) -> LinearCode:
    if code.parity is None:
        raise ValueError("code has no parity-check matrix")
    G = nullspace(code.field, code.parity, code.n)
    return LinearCode(code.field, generator=G, parity=code.parity, n=code.n)


def syndrome(code: LinearCode, y) -> np.ndarray:
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (code.n,):
        raise ValueError(f"expected a vector of length {code.n}")
    H = code.parity_matrix()
    if len(H) == 0:
        return np.zeros(0, dtype=np.int64)
    return matmul(code.field, H, y[:, None])[:, 0]


# --- characteristic vector / function ------------------------------------------------

@dataclass(frozen=True, eq=False)
class CharacteristicVector:
    table: ProjectiveTable
    chi: np.ndarray

    @property
    def n(self) -> int:
        return int(self.chi.sum())


def characteristic_vector(code: LinearCode, table: ProjectiveTable | None = None) -> CharacteristicVector:
    """chi[u] = number of generator columns proportional to e_u."""
    G = code.generator_matrix()
    if code.k < 1:
        raise ValueError("zero-dimensional code has no characteristic vector")
    if np.any(~G.any(axis=0)):
        raise ValueError("generator has a zero column; strip it first")
    table = table or build_table(code.field, code.k)
    idx = table.class_indices(G.T)
    chi = np.bincount(idx - 1, minlength=table.theta).astype(np.int64)
    return CharacteristicVector(table, chi)


def char_function(code: LinearCode, table: ProjectiveTable | None = None) -> ReducedSpectrum:
    """Indicator of the columns of H and all their nonzero multiples."""
    H = code.parity_matrix()
    r = code.redundancy
    if r < 1:
        raise ValueError("code has no redundancy (k = n)")
    if np.any(~H.any(axis=0)):
        raise ValueError("parity-check matrix has a zero column; strip that coordinate")
    table = table or build_table(code.field, r)
    pts = np.zeros(table.theta, dtype=np.int64)
    pts[table.class_indices(H.T) - 1] = 1
    return ReducedSpectrum(table, 0, pts.astype(object))


# --- oracles ----------------------------------------------------------------------

@dataclass(frozen=True)
class CosetLeaderProfile:
    counts: dict[int, int]
    method: str = "oracle"
    notes: tuple[str, ...] = dc_field(default=())

    @property
    def covering_radius(self) -> int:
        return max(w for w, c in self.counts.items() if c)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def oracle_coset_profile(code: LinearCode, budget: int = ORACLE_BUDGET) -> CosetLeaderProfile:
    """Syndrome sweep over error vectors of nondecreasing weight."""
    field = code.field
    q, r = field.q, code.redundancy
    if r == 0:
        return CosetLeaderProfile({0: 1})
    if q**r > budget:
        raise BudgetError(f"q^(n-k) = {q**r} exceeds the oracle budget {budget}")
    H = code.parity_matrix()
    # multiples[i, a - 1] = a * (column i)
    scalars = np.arange(1, q)
    multiples = field.mul(scalars[None, :, None], H.T[:, None, :])
    seen = np.zeros(q**r, dtype=bool)
    seen[0] = True
    remaining = q**r - 1
    counts = {0: 1}
    for w in range(1, code.n + 1):
        if remaining == 0:
            break
        found = 0
        patterns = lex_vectors(q - 1, w)
        per_combo = len(patterns) * r
        step = max(1, _CHUNK_ENTRIES // per_combo)
        combos = itertools.combinations(range(code.n), w)
        while remaining:
            batch = np.array(list(itertools.islice(combos, step)), dtype=np.int64)
            if len(batch) == 0:
                break
            syn = multiples[batch[:, None, 0], patterns[None, :, 0]]
            for t in range(1, w):
                syn = field.add(syn, multiples[batch[:, None, t], patterns[None, :, t]])
            codes = np.unique(lex_code(q, syn.reshape(-1, r)))
            new = codes[~seen[codes]]
            seen[new] = True
            found += len(new)
            remaining -= len(new)
        if found:
            counts[w] = found
    if remaining:
        raise AssertionError("syndrome sweep missed cosets; H is not full rank")
    return CosetLeaderProfile(counts)


def oracle_weight_distribution(code: LinearCode, budget: int = ORACLE_BUDGET) -> list[int]:
    """(A_0, ..., A_n) by enumerating every codeword."""
    field = code.field
    q, k, n = field.q, code.k, code.n
    if q**k > budget:
        raise BudgetError(f"q^k = {q**k} exceeds the oracle budget {budget}")
    A = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        A[0] = 1
        return A.tolist()
    G = code.generator_matrix()
    total = q**k
    step = max(1, _CHUNK_ENTRIES // (n * k))
    for start in range(0, total, step):
        idx = np.arange(start, min(total, start + step), dtype=np.int64)
        msgs = np.stack([(idx // q ** (k - 1 - i)) % q for i in range(k)], axis=1)
        words = matmul(field, msgs, G)
        A += np.bincount((words != 0).sum(axis=1), minlength=n + 1)
    return A.tolist()
