"""Time the reduced covering-radius pipeline as n - k grows.

The decision transforms have length theta(q, r) = (q^r - 1)/(q - 1), so the
table also reports q^r for comparison.
"""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from covrad import LinearCode, gf, theta
from covrad.analysis import covering_radius_transform
from covrad.code import rank


@dataclass(frozen=True)
class ScaleConfig:
    q: int = 3
    redundancies: tuple[int, ...] = (3, 5, 7, 9)
    extra: int = 11
    seed: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=ScaleConfig.q)
    ap.add_argument("--r", type=int, nargs="+", default=list(ScaleConfig.redundancies))
    ap.add_argument("--extra", type=int, default=ScaleConfig.extra, help="n = r + extra")
    ap.add_argument("--seed", type=int, default=ScaleConfig.seed)
    a = ap.parse_args()
    cfg = ScaleConfig(a.q, tuple(a.r), a.extra, a.seed)

    F = gf(cfg.q)
    rng = np.random.default_rng(cfg.seed)
    print(f"{'r':>3} {'n':>4} {'theta':>9} {'q^r':>10} {'rho':>4} {'seconds':>9}")
    for r in cfg.redundancies:
        n = r + cfg.extra
        while True:
            H = rng.integers(0, cfg.q, (r, n))
            if H.any(axis=0).all() and rank(F, H) == r:
                break
        code = LinearCode.from_parity(F, H)
        t0 = time.perf_counter()
        rho = covering_radius_transform(code).covering_radius
        dt = time.perf_counter() - t0
        print(f"{r:>3} {n:>4} {theta(cfg.q, r):>9} {cfg.q**r:>10} {rho:>4} {dt:>9.2f}")


if __name__ == "__main__":
    main()
