"""Brute-force subspace, subalgebra and ideal lattices over finite fields."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..exactlin import Field, Subspace
from ..leibcore import (
    LeibnizAlgebra,
    is_cartan,
    is_ideal,
    is_subalgebra,
    product_space,
)
from .census import BudgetExceeded

__all__ = [
    "DEFAULT_SUBSPACE_BUDGET",
    "gaussian_binomial_total",
    "all_subspaces",
    "all_subalgebras",
    "maximal_subalgebras_bruteforce",
    "frattini_bruteforce",
    "all_ideals",
    "minimal_ideals_bruteforce",
    "maximal_ideals_bruteforce",
    "socle_bruteforce",
    "cartan_subalgebras_bruteforce",
]

DEFAULT_SUBSPACE_BUDGET = 10**6


def gaussian_binomial_total(q: int, n: int) -> int:
    """Number of subspaces of ``GF(q)^n``."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


@lru_cache(maxsize=64)
def _subspaces(p: int, n: int) -> tuple:
    field = Field(p)
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            # free entries: row r, column c > pivot r that is not a pivot column
            slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(slots, values):
                    rows[r][c] = v
                out.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    return tuple(out)


def all_subspaces(field: Field, n: int, budget: int = DEFAULT_SUBSPACE_BUDGET) -> tuple:
    """Every subspace of ``field^n`` exactly once, built from RREF profiles."""
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    total = gaussian_binomial_total(field.p, n)
    if total > budget:
        raise BudgetExceeded(f"subspace lattice of {field}^{n}", total, budget)
    return _subspaces(field.p, n)


def all_subalgebras(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    return [U for U in all_subspaces(A.field, A.dim, budget) if is_subalgebra(A, U)]


def _maximal(spaces: list[Subspace]) -> list[Subspace]:
    return [U for U in spaces if not any(U < V for V in spaces)]


def _minimal(spaces: list[Subspace]) -> list[Subspace]:
    return [U for U in spaces if not any(V < U for V in spaces)]


def maximal_subalgebras_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    proper = [U for U in all_subalgebras(A, budget) if not U.is_full()]
    return _maximal(proper)


def frattini_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> Subspace:
    """Intersection of the maximal subalgebras; ``A`` itself when there are none (dim 0)."""
    result = A.full_space()
    for M in maximal_subalgebras_bruteforce(A, budget):
        result = result & M
    return result


def all_ideals(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    return [U for U in all_subspaces(A.field, A.dim, budget) if is_ideal(A, U)]


def minimal_ideals_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    return _minimal([I for I in all_ideals(A, budget) if not I.is_zero()])


def maximal_ideals_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    return _maximal([I for I in all_ideals(A, budget) if not I.is_full()])


def socle_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> Subspace:
    out = A.zero_space()
    for I in minimal_ideals_bruteforce(A, budget):
        out = out + I
    return out


def cartan_subalgebras_bruteforce(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> list[Subspace]:
    return [U for U in all_subalgebras(A, budget) if is_cartan(A, U)]


def squares(A: LeibnizAlgebra) -> Subspace:
    full = A.full_space()
    return product_space(A, full, full)
