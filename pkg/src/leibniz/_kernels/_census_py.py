"""Pure-Python census kernels with the same contract as the compiled ones."""

from __future__ import annotations

import numpy as np


def _leibniz(c, p: int, n: int) -> bool:
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                jk = (j * n + k) * n
                ij = (i * n + j) * n
                ik = (i * n + k) * n
                for l in rng:
                    s = 0
                    for m in rng:
                        s += c[jk + m] * c[(i * n + m) * n + l]
                        s -= c[ij + m] * c[(m * n + k) * n + l]
                        s -= c[ik + m] * c[(j * n + m) * n + l]
                    if s % p:
                        return False
    return True


def filter_range(p: int, n: int, start: int, stop: int) -> np.ndarray:
    N = n * n * n
    c = [0] * N
    rem = start
    for d in range(N - 1, -1, -1):
        rem, c[d] = divmod(rem, p)
    out = []
    idx = start
    while idx < stop:
        if _leibniz(c, p, n):
            out.append(idx)
        idx += 1
        d = N - 1
        while d >= 0:
            c[d] += 1
            if c[d] < p:
                break
            c[d] = 0
            d -= 1
    return np.asarray(out, dtype=np.int64)


def check_tables(p: int, n: int, tables) -> np.ndarray:
    t = np.asarray(tables, dtype=np.int64).reshape(-1, n * n * n) % p
    return np.array([_leibniz(row.tolist(), p, n) for row in t], dtype=bool)
