"""Isomorphism search over GL(n, q)."""

from __future__ import annotations

import itertools

from ..exactlin import Matrix, Subspace, rref
from ..leibcore import (
    LeibnizAlgebra,
    center,
    left_center,
    lower_central_series,
    right_center,
    upper_central_series,
)
from .census import BudgetExceeded

__all__ = ["DEFAULT_GL_BUDGET", "gl_order", "invariants", "is_isomorphic", "transport"]

DEFAULT_GL_BUDGET = 10**7


def gl_order(q: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def invariants(A: LeibnizAlgebra) -> tuple:
    """Cheap isomorphism invariants used to reject pairs before the GL sweep."""
    lower = lower_central_series(A)
    upper = upper_central_series(A)
    return (
        A.dim,
        tuple(lower.dims),
        lower.stabilized,
        tuple(upper.dims),
        center(A).dim,
        left_center(A).dim,
        right_center(A).dim,
    )


def transport(A: LeibnizAlgebra, P: Matrix) -> LeibnizAlgebra:
    """The algebra on basis ``f_i = P e_i``: structure constants of ``A`` in that basis."""
    n = A.dim
    cols = [P.column(j) for j in range(n)]
    Pinv = _inverse(P)
    sc = [[Pinv.apply(A.mul(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    return LeibnizAlgebra(A.field, n, sc, check=False)


def _inverse(P: Matrix) -> Matrix:
    n = P.nrows
    f = P.field
    aug = Matrix(f, tuple(r + Matrix.identity(f, n).rows[i] for i, r in enumerate(P.rows)), 2 * n)
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return Matrix(f, tuple(r[n:] for r in red.rows), n)


def is_isomorphic(A: LeibnizAlgebra, B: LeibnizAlgebra, budget: int = DEFAULT_GL_BUDGET,
                  precheck: bool = True) -> Matrix | None:
    """An invertible ``P`` with ``P(xy) = P(x) P(y)`` (A -> B), or ``None``.

    Columns of ``P`` are the images of the basis of ``A``.  The search assigns
    images column by column, keeping them independent, and tests each basis
    product as soon as every column it touches is fixed.
    """
    if A.field != B.field or not A.field.is_finite:
        raise ValueError("isomorphism search needs two algebras over the same finite field")
    if A.dim != B.dim:
        return None
    n, q = A.dim, A.field.p
    if gl_order(q, n) > budget:
        raise BudgetExceeded(f"GL({n},{q}) sweep", gl_order(q, n), budget)
    if precheck and invariants(A) != invariants(B):
        return None
    f = A.field
    # products (i, j) checkable once columns 0..k are chosen
    ready: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            support = [k for k, c in enumerate(A.sc[i][j]) if c]
            ready[max([i, j] + support)].append((i, j))
    vectors = list(itertools.product(range(q), repeat=n))
    cols: list[tuple] = []

    def consistent(k: int) -> bool:
        for i, j in ready[k]:
            lhs = [0] * n
            for m, c in enumerate(A.sc[i][j]):
                if c:
                    lhs = [(x + c * y) % q for x, y in zip(lhs, cols[m])]
            if tuple(lhs) != B.mul(cols[i], cols[j]):
                return False
        return True

    def search(k: int, span: Subspace) -> bool:
        if k == n:
            return True
        for v in vectors:
            if v in span:
                continue
            cols.append(v)
            if consistent(k) and search(k + 1, span + Subspace.span(f, n, [v])):
                return True
            cols.pop()
        return False

    if not search(0, Subspace.zero(f, n)):
        return None
    return Matrix.from_columns(f, cols, n)
