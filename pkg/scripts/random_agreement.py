"""Compare transform results against brute force on random codes."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from covrad import LinearCode, gf, oracle_coset_profile, oracle_weight_distribution
from covrad.analysis import code_weight_distribution, coset_leader_distribution_transform, covering_radius_transform
from covrad.code import rank


@dataclass(frozen=True)
class SweepConfig:
    qs: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)
    count: int = 100
    max_n: int = 10
    max_r: int = 4
    seed: int = 0


def random_full_rank(F, rows, cols, rng):
    while True:
        M = rng.integers(0, F.q, (rows, cols))
        if M.any(axis=0).all() and rank(F, M) == rows:
            return M


def run(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for i in range(cfg.count):
        q = cfg.qs[i % len(cfg.qs)]
        F = gf(q)
        r = int(rng.integers(1, cfg.max_r + 1))
        n = int(rng.integers(r + 1, cfg.max_n + 1))
        code = LinearCode.from_parity(F, random_full_rank(F, r, n, rng))
        oracle = oracle_coset_profile(code)
        tally["radius", covering_radius_transform(code).covering_radius == oracle.covering_radius] += 1
        if q % 2:
            tally["leaders", coset_leader_distribution_transform(code).counts == oracle.counts] += 1
        if n - r <= 6:
            tally["weights", list(code_weight_distribution(code).A) == oracle_weight_distribution(code)] += 1
    elapsed = time.perf_counter() - t0
    for what in ("radius", "leaders", "weights"):
        ok, bad = tally[what, True], tally[what, False]
        print(f"{what:8s} agree {ok:4d}  disagree {bad:4d}")
    print(f"{cfg.count} codes in {elapsed:.1f}s")
    return all(not v for (_, good), v in tally.items() if not good)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-r", type=int, default=SweepConfig.max_r)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--q", type=int, nargs="+", default=list(SweepConfig.qs))
    a = ap.parse_args()
    ok = run(SweepConfig(tuple(a.q), a.count, a.max_n, a.max_r, a.seed))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
