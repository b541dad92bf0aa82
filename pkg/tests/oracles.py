"""Brute-force reference computations, independent of the library's algorithms.

Only the field tables from covrad.gf are reused; everything else is
plain-Python enumeration or floating-point complex arithmetic.
"""

import cmath
import itertools
from collections import deque

import numpy as np


def add_vec(F, u, v):
    return tuple(int(F.add(a, b)) for a, b in zip(u, v))


def scale_vec(F, c, v):
    return tuple(int(F.mul(c, a)) for a in v)


def dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = int(F.add(acc, F.mul(a, b)))
    return acc


def bfs_coset_weights(F, H):
    """Coset weight of every syndrome: shortest path in the Cayley graph of scaled columns."""
    H = np.asarray(H)
    r, n = H.shape
    gens = {scale_vec(F, c, tuple(H[:, i])) for i in range(n) for c in range(1, F.q)}
    gens.discard((0,) * r)
    zero = (0,) * r
    dist = {zero: 0}
    frontier = deque([zero])
    while frontier:
        s = frontier.popleft()
        for g in gens:
            t = add_vec(F, s, g)
            if t not in dist:
                dist[t] = dist[s] + 1
                frontier.append(t)
    counts = {}
    for d in dist.values():
        counts[d] = counts.get(d, 0) + 1
    return counts


def enumerate_weights(F, G):
    """Weight distribution by listing every message."""
    G = np.asarray(G)
    k, n = G.shape
    A = [0] * (n + 1)
    for msg in itertools.product(range(F.q), repeat=k):
        word = (0,) * n
        for c, row in zip(msg, G):
            word = add_vec(F, word, scale_vec(F, c, row))
        A[sum(1 for x in word if x)] += 1
    return A


def smallest_cover(F, H):
    """Least s such that every syndrome is a combination of <= s columns of H."""
    H = np.asarray(H)
    r, n = H.shape
    reach = {(0,) * r}
    total = F.q**r
    for s in range(0, n + 1):
        if len(reach) == total:
            return s
        new = set()
        for cols in itertools.combinations(range(n), s + 1):
            for coeffs in itertools.product(range(1, F.q), repeat=s + 1):
                v = (0,) * r
                for c, i in zip(coeffs, cols):
                    v = add_vec(F, v, scale_vec(F, c, tuple(H[:, i])))
                new.add(v)
        reach |= new
    raise AssertionError("H does not span")


def complex_transform(F, s, values):
    """Full transform in floating-point complex arithmetic, pair by pair."""
    zeta = cmath.exp(2j * cmath.pi / F.p)
    vecs = list(itertools.product(range(F.q), repeat=s))
    out = []
    for w in vecs:
        acc = 0j
        for x, h in zip(vecs, values):
            acc += h * zeta ** int(F.trace(dot(F, w, x)))
        out.append(acc)
    return out


def random_full_rank(F, rows, cols, rng, no_zero_columns=True):
    from covrad.code import rank

    for _ in range(1000):
        M = rng.integers(0, F.q, size=(rows, cols))
        if no_zero_columns and not M.any(axis=0).all():
            continue
        if rank(F, M) == rows:
            return M
    raise RuntimeError("could not draw a full-rank matrix")
