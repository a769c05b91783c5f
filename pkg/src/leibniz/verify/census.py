"""Exhaustive (or sampled) censuses of Leibniz structure-constant tables."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .. import _kernels
from ..exactlin import Field
from ..leibcore import LeibnizAlgebra

__all__ = [
    "BudgetExceeded",
    "Census",
    "DEFAULT_TABLE_BUDGET",
    "enumerate_leibniz",
    "algebra_from_flat",
    "nilpotent_adapted_census",
]

DEFAULT_TABLE_BUDGET = 2**27


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} but the budget is {budget}")


def algebra_from_flat(field: Field, n: int, flat) -> LeibnizAlgebra:
    sc = [[[flat[(i * n + j) * n + k] for k in range(n)] for j in range(n)] for i in range(n)]
    return LeibnizAlgebra(field, n, sc, check=False)


@dataclass
class Census:
    """Leibniz tables over a finite field, in increasing table-index order.

    ``tables`` holds the flat structure constants of each member; ``universe``
    describes what was scanned (``exhaustive``, ``range`` or ``sampled``).
    """

    field: Field
    dim: int
    tables: list
    universe: str
    scanned: int
    stats: dict = dc_field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.tables)

    def __iter__(self) -> Iterator[LeibnizAlgebra]:
        for flat in self.tables:
            yield algebra_from_flat(self.field, self.dim, flat)

    def describe(self) -> str:
        return f"{self.field} dim {self.dim} {self.universe} ({len(self)} Leibniz of {self.scanned} tables)"

    def representatives(self) -> list[LeibnizAlgebra]:
        """One algebra per isomorphism class, first in census order."""
        from .iso import invariants, is_isomorphic

        reps: dict[tuple, list[LeibnizAlgebra]] = {}
        out = []
        for A in self:
            key = invariants(A)
            bucket = reps.setdefault(key, [])
            if not any(is_isomorphic(A, B) is not None for B in bucket):
                bucket.append(A)
                out.append(A)
        return out


def _filter_chunk(args):
    p, n, lo, hi = args
    return _kernels.filter_range(p, n, lo, hi)


@lru_cache(maxsize=32)
def _indices(p: int, n: int, start: int, stop: int, workers: int) -> tuple:
    if workers <= 1 or stop - start < 2**16:
        return tuple(int(i) for i in _kernels.filter_range(p, n, start, stop))
    step = -(-(stop - start) // (workers * 4))
    chunks = [(p, n, lo, min(lo + step, stop)) for lo in range(start, stop, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_filter_chunk, chunks))
    return tuple(int(i) for part in parts for i in part)


def enumerate_leibniz(field: Field, dim: int, budget: int = DEFAULT_TABLE_BUDGET, start: int | None = None,
                      stop: int | None = None, sample: int | None = None, seed: int = 0,
                      workers: int = 1) -> Census:
    """All tables of ``field^(dim^3)`` satisfying the left Leibniz identity.

    ``start``/``stop`` restrict to an index range (partitioned runs);
    ``sample`` draws that many uniformly random tables instead, which is the
    only mode allowed when ``q^(dim^3)`` exceeds ``budget``.
    """
    if not field.is_finite:
        raise ValueError("censuses need a finite field")
    p, n = field.p, dim
    N = n**3
    total = p**N
    if sample is not None:
        rng = np.random.default_rng(seed)
        digits = rng.integers(0, p, size=(sample, N), dtype=np.int64)
        if total <= 2**62:
            weights = np.array([p ** (N - 1 - d) for d in range(N)], dtype=np.int64)
            order = np.argsort(digits @ weights, kind="stable")
            digits = digits[order]
        mask = _kernels.check_tables(p, n, digits) if N else np.ones(sample, dtype=bool)
        tables = [tuple(int(x) for x in row) for row in digits[mask]]
        return Census(field, dim, tables, "sampled", sample, {"seed": seed})
    lo = 0 if start is None else start
    hi = total if stop is None else min(stop, total)
    if hi - lo > budget:
        raise BudgetExceeded(f"census of {field} dim {dim}", hi - lo, budget)
    if N == 0:
        return Census(field, dim, [()], "exhaustive", 1)
    idx = _indices(p, n, lo, hi, workers)
    tables = [_kernels.decode(p, n, i) for i in idx]
    universe = "exhaustive" if (lo, hi) == (0, total) else f"range [{lo}, {hi})"
    return Census(field, dim, tables, universe, hi - lo)


def _adapted_positions(n: int) -> list[int]:
    return [(i * n + j) * n + k for i in range(n) for j in range(n) for k in range(n) if k > max(i, j)]


def nilpotent_adapted_census(field: Field, dim: int, sample: int | None = None, seed: int = 0,
                             budget: int = 2**24) -> Census:
    """Leibniz tables with ``e_i e_j`` in ``span{e_k : k > max(i, j)}``.

    Every nilpotent algebra has such a basis (refine its upper central
    series), so this covers all nilpotent algebras of the given dimension up
    to isomorphism, with far fewer tables than the raw census.
    """
    p, n = field.p, dim
    pos = _adapted_positions(n)
    total = p ** len(pos)
    N = n**3
    if sample is None:
        if total > budget:
            raise BudgetExceeded(f"adapted nilpotent census of {field} dim {dim}", total, budget)
        free = np.array(list(itertools.product(range(p), repeat=len(pos))), dtype=np.int64).reshape(total, len(pos))
        universe = "adapted-exhaustive"
        scanned = total
    else:
        free = np.random.default_rng(seed).integers(0, p, size=(sample, len(pos)), dtype=np.int64)
        universe = "adapted-sampled"
        scanned = sample
    digits = np.zeros((free.shape[0], N), dtype=np.int64)
    if pos:
        digits[:, pos] = free
    mask = _kernels.check_tables(p, n, digits) if N else np.ones(len(digits), dtype=bool)
    tables = [tuple(int(x) for x in row) for row in digits[mask]]
    return Census(field, dim, tables, universe, scanned)
