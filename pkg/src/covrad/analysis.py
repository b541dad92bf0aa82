"""Weight distribution, covering radius and coset-leader counts from reduced transforms."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

import numpy as np

from .code import (
    ORACLE_BUDGET,
    CharacteristicVector,
    CosetLeaderProfile,
    LinearCode,
    char_function,
    characteristic_vector,
    oracle_coset_profile,
)
from .errors import BudgetError, IterationCapError
from .projective import THETA_BUDGET, ProjectiveTable, build_table, theta
from .spectral import ReducedSpectrum, pointwise_power, reduced_distribution, reduced_transform

ODD_PRIME = "odd_prime"
ODD_COMPOSITE = "odd_composite"
EVEN_ACCUMULATED = "even_accumulated"
ORACLE = "oracle"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class WeightDistribution:
    A: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.A) - 1

    def nonzero(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.A) if a}


@dataclass
class RadiusReport:
    covering_radius: int
    method: str
    per_j_nonzero: dict[int, int] = dc_field(default_factory=dict)
    witness_counts: list[int] | None = None
    spectra: dict[int, ReducedSpectrum] | None = None
    notes: list[str] = dc_field(default_factory=list)


def _method_for(q_field) -> str:
    if q_field.p == 2:
        return EVEN_ACCUMULATED
    return ODD_PRIME if q_field.is_prime else ODD_COMPOSITE


# --- weight distribution -----------------------------------------------------------

def representative_weights(chi: CharacteristicVector, path: str = "reduced") -> list[int]:
    """Weight of the codeword attached to each projective point.

    ``reduced`` uses NM chi = ((q-1) n 1 - r(chi)) / q; ``direct`` computes
    NM chi by itself.
    """
    table = chi.table
    q, n = table.q, chi.n
    if path == "reduced":
        r = reduced_distribution(table, chi.chi.tolist())
        w = []
        for x in ((q - 1) * n - r).tolist():
            if x % q:
                raise ArithmeticError("reduced distribution is not congruent mod q")
            w.append(x // q)
        return w
    if path == "direct":
        return [int(x) for x in table.nm_matvec(chi.chi.tolist())]
    raise ValueError(f"unknown path {path!r}")


def weight_distribution(chi: CharacteristicVector, path: str = "reduced") -> WeightDistribution:
    if len(chi.chi) != chi.table.theta:
        raise ValueError("characteristic vector length does not match the table")
    n = chi.n
    if n < 1:
        raise ValueError("characteristic vector is empty")
    q = chi.table.q
    A = [0] * (n + 1)
    A[0] = 1
    for w in representative_weights(chi, path):
        if w == 0:
            raise ValueError("a representative codeword is zero: generator is rank deficient")
        A[w] += q - 1
    return WeightDistribution(tuple(A))


def code_weight_distribution(code: LinearCode, path: str = "reduced") -> WeightDistribution:
    """Weight distribution of ``code``; zero generator columns only pad the length."""
    if code.k == 0:
        return WeightDistribution(tuple([1] + [0] * code.n))
    G = code.generator_matrix()
    keep = G.any(axis=0)
    if not keep.all():
        code = LinearCode.from_generator(code.field, G[:, keep])
    A = weight_distribution(characteristic_vector(code), path).A
    return WeightDistribution(A + (0,) * (len(keep) + 1 - len(A)))


# --- covering radius ---------------------------------------------------------------

class _DecisionRounds:
    """Produces S_j for successive j from a fixed h_hat."""

    def __init__(self, table: ProjectiveTable, F: ReducedSpectrum, accumulate: bool):
        self.table = table
        self.F = F
        self.accumulate = accumulate
        self._acc = None
        self._acc_j = 0

    def _input(self, j: int) -> ReducedSpectrum:
        if not self.accumulate:
            return pointwise_power(self.F, j)
        if self._acc is None or self._acc_j > j:
            self._acc, self._acc_j = None, 0
        while self._acc_j < j:
            self._acc_j += 1
            P = pointwise_power(self.F, self._acc_j)
            self._acc = P if self._acc is None else self._acc + P
        return self._acc

    def __call__(self, j: int) -> ReducedSpectrum:
        return reduced_transform(self.table, self._input(j))


def _check_decision(S: ReducedSpectrum, modulus: int, j: int):
    for v in S.at_points.tolist():
        if v < 0 or v % modulus:
            raise ArithmeticError(f"decision value {v} at j={j} is not a nonnegative multiple of {modulus}")


def covering_radius_transform(
    code: LinearCode,
    start_j: int | None = None,
    keep_spectra: bool = False,
    budget: int = THETA_BUDGET,
) -> RadiusReport:
    """Least j whose decision transform is nonzero at every projective point."""
    field = code.field
    q, r, n = field.q, code.redundancy, code.n
    if r == 0:
        return RadiusReport(0, TRIVIAL)
    start = 1 if start_j is None else int(start_j)
    if start < 1:
        raise ValueError("start_j must be >= 1")
    if start > n:
        raise IterationCapError(f"start_j={start} exceeds the code length {n}")
    method = _method_for(field)
    table = build_table(field, r, budget)
    f = char_function(code, table)
    F = reduced_transform(table, f)
    rounds = _DecisionRounds(table, F, accumulate=(method == EVEN_ACCUMULATED))
    modulus = q**r
    report = RadiusReport(0, method, spectra={} if keep_spectra else None)

    if start > 1:
        S = rounds(start - 1)
        if bool(S.nonzero_points().all()):
            msg = f"start_j={start} is not a lower bound: j={start - 1} already covers; restarting at 1"
            warnings.warn(msg, stacklevel=2)
            report.notes.append(msg)
            start = 1

    for j in range(start, n + 1):
        S = rounds(j)
        _check_decision(S, modulus, j)
        nz = S.nonzero_points()
        report.per_j_nonzero[j] = int(nz.sum())
        if keep_spectra:
            report.spectra[j] = S
        if nz.all():
            report.covering_radius = j
            report.witness_counts = [v // modulus for v in S.at_points.tolist()]
            return report
    raise IterationCapError(f"no covering found up to j = n = {n}; check that H is valid")


def coset_leader_distribution_transform(code: LinearCode, budget: int = THETA_BUDGET) -> CosetLeaderProfile:
    """Coset-leader weight counts by differencing consecutive decision supports."""
    field = code.field
    q, r = field.q, code.redundancy
    if r == 0:
        return CosetLeaderProfile({0: 1}, method=TRIVIAL)
    if field.p == 2:
        prof = oracle_coset_profile(code)
        return CosetLeaderProfile(
            prof.counts, method=ORACLE, notes=("even characteristic: counts from the syndrome sweep",)
        )
    method = _method_for(field)
    notes = ()
    if method == ODD_COMPOSITE:
        notes = ("odd composite field: differencing rule extended from the prime case",)
    table = build_table(field, r, budget)
    f = char_function(code, table)
    F = reduced_transform(table, f)
    rounds = _DecisionRounds(table, F, accumulate=False)
    covered = f.nonzero_points()
    counts = {0: 1, 1: (q - 1) * int(covered.sum())}
    j = 1
    while not covered.all():
        j += 1
        if j > code.n:
            raise IterationCapError(f"no covering found up to j = n = {code.n}")
        nz = rounds(j).nonzero_points()
        if np.any(covered & ~nz):
            raise ArithmeticError(f"decision support shrank at j={j}")
        counts[j] = (q - 1) * int((nz & ~covered).sum())
        covered = nz
    return CosetLeaderProfile(counts, method=method, notes=notes)


def covering_radius(
    code: LinearCode,
    method: str = "auto",
    start_j: int | None = None,
    theta_budget: int = THETA_BUDGET,
    oracle_budget: int = ORACLE_BUDGET,
    keep_spectra: bool = False,
) -> RadiusReport:
    """Dispatch between the transform pipeline and the syndrome-sweep oracle."""
    r = code.redundancy
    if r == 0:
        return RadiusReport(0, TRIVIAL)
    th = theta(code.field.q, r)
    if method == "auto":
        if th <= theta_budget:
            method = "transform"
        elif code.field.q**r <= oracle_budget:
            method = "oracle"
        else:
            raise BudgetError(f"theta = {th} and q^(n-k) = {code.field.q**r} both exceed their budgets")
    if method == "transform":
        return covering_radius_transform(code, start_j, keep_spectra=keep_spectra, budget=theta_budget)
    if method == "oracle":
        prof = oracle_coset_profile(code, oracle_budget)
        return RadiusReport(prof.covering_radius, ORACLE)
    raise ValueError(f"unknown method {method!r}")
