"""Cyclic (one-generated) Leibniz algebras and their closed-form structure.

A cyclic algebra of dimension ``n`` has basis ``a, a^2, ..., a^n`` (coordinate
``i`` is ``a^{i+1}``), with ``a a^i = a^{i+1}`` for ``i < n``,
``a a^n = alpha_2 a^2 + ... + alpha_n a^n`` and every product with a left
factor in ``A^2`` equal to zero.  Everything below is read off the polynomial
``p(x) = x^n - alpha_n x^{n-1} - ... - alpha_2 x`` of ``L_a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .exactlin import Field, Matrix, Subspace, apply_poly, fitting_components, null_space
from .leibcore import LeibnizAlgebra
from .unipoly import Factorization, Polynomial, factor

__all__ = [
    "CyclicSpec",
    "CyclicReport",
    "PrimaryBlock",
    "build_cyclic",
    "companion_and_p",
    "primary_decomposition",
    "frattini_cyclic",
    "is_frattini_trivial",
    "maximal_subalgebras_cyclic",
    "cartan_cyclic",
    "minimal_ideals_cyclic",
    "socle_cyclic",
    "maximal_ideal_cyclic",
    "fitting_decomposition_cyclic",
    "cyclic_report",
]


@dataclass(frozen=True)
class CyclicSpec:
    field: Field
    alphas: tuple  # (alpha_2, ..., alpha_n)

    @property
    def n(self) -> int:
        return len(self.alphas) + 1

    @classmethod
    def of(cls, field: Field, alphas: Sequence) -> "CyclicSpec":
        return cls(field, tuple(field(a) for a in alphas))


def build_cyclic(field: Field, alphas: Sequence) -> tuple[LeibnizAlgebra, CyclicSpec]:
    spec = CyclicSpec.of(field, alphas)
    n = spec.n
    sc = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n - 1):
        sc[0][i][i + 1] = 1
    for k, alpha in enumerate(spec.alphas, start=1):
        sc[0][n - 1][k] = alpha
    labels = ["a"] + [f"a^{i}" for i in range(2, n + 1)]
    return LeibnizAlgebra(field, n, sc, labels=labels, check=False), spec


def companion_and_p(spec: CyclicSpec) -> tuple[Matrix, Polynomial]:
    """Matrix ``T`` of ``L_a`` in the basis ``a, ..., a^n`` and ``p(x)``."""
    f = spec.field
    n = spec.n
    cols = []
    for i in range(n - 1):
        col = [f.zero] * n
        col[i + 1] = f.one
        cols.append(col)
    cols.append([f.zero] + list(spec.alphas))
    T = Matrix.from_columns(f, cols, n)
    coeffs = [f.zero] + [f.neg(a) for a in spec.alphas] + [f.one]
    return T, Polynomial(f, coeffs)


def _ordered_factors(p: Polynomial) -> list[tuple[Polynomial, int]]:
    # x first, then the remaining factors in unipoly's canonical order
    x = Polynomial.x(p.field)
    facs = list(factor(p).factors)
    facs.sort(key=lambda t: (t[0] != x, t[0].sort_key()))
    assert facs[0][0] == x, "x always divides p"
    return facs


def _prod(field: Field, polys) -> Polynomial:
    return reduce(lambda a, b: a * b, polys, Polynomial(field, (1,)))


def _kernel(T: Matrix, f: Polynomial) -> Subspace:
    return null_space(apply_poly(T, f))


@dataclass(frozen=True)
class PrimaryBlock:
    factor: Polynomial
    multiplicity: int
    component: Subspace  # kernel of factor(L_a)^multiplicity
    chain: tuple  # kernels of factor(L_a)^i, i = 1..multiplicity


def primary_decomposition(spec: CyclicSpec) -> list[PrimaryBlock]:
    T, p = companion_and_p(spec)
    blocks = []
    for g, m in _ordered_factors(p):
        chain = tuple(_kernel(T, g**i) for i in range(1, m + 1))
        blocks.append(PrimaryBlock(g, m, chain[-1], chain))
    return blocks


def frattini_cyclic(spec: CyclicSpec) -> Subspace:
    """Kernel of ``q(L_a)`` with ``q = prod p_j^{n_j - 1}``."""
    T, p = companion_and_p(spec)
    q = _prod(spec.field, (g ** (m - 1) for g, m in _ordered_factors(p)))
    return _kernel(T, q)


def is_frattini_trivial(spec: CyclicSpec) -> bool:
    """True iff ``p`` is squarefree."""
    _, p = companion_and_p(spec)
    return all(m == 1 for _, m in _ordered_factors(p))


def maximal_subalgebras_cyclic(spec: CyclicSpec) -> list[Subspace]:
    """Kernels of ``r_j(L_a)``, ``r_j = p / p_j``, one per irreducible factor."""
    T, p = companion_and_p(spec)
    return [_kernel(T, p // g) for g, _ in _ordered_factors(p)]


def cartan_cyclic(spec: CyclicSpec) -> Subspace:
    return fitting_decomposition_cyclic(spec)[0]


def fitting_decomposition_cyclic(spec: CyclicSpec) -> tuple[Subspace, Subspace]:
    T, _ = companion_and_p(spec)
    return fitting_components(T)


def minimal_ideals_cyclic(spec: CyclicSpec) -> list[Subspace]:
    """``ker p_j(L_a)`` for ``j >= 2``, plus ``ker L_a`` when ``x^2`` divides ``p``."""
    T, p = companion_and_p(spec)
    facs = _ordered_factors(p)
    out = []
    if facs[0][1] > 1:
        out.append(_kernel(T, facs[0][0]))
    out.extend(_kernel(T, g) for g, _ in facs[1:])
    return out


def socle_cyclic(spec: CyclicSpec) -> Subspace:
    T, p = companion_and_p(spec)
    facs = _ordered_factors(p)
    used = facs if facs[0][1] > 1 else facs[1:]
    return _kernel(T, _prod(spec.field, (g for g, _ in used)))


def maximal_ideal_cyclic(spec: CyclicSpec) -> Subspace:
    """Kernel of ``t(L_a)``, ``t = p / x``; always ``A^2``."""
    T, p = companion_and_p(spec)
    return _kernel(T, p // Polynomial.x(spec.field))


@dataclass(frozen=True)
class CyclicReport:
    spec: CyclicSpec
    p: Polynomial
    factorization: Factorization
    frattini: Subspace
    maximal_subalgebras: tuple
    cartan: Subspace
    minimal_ideals: tuple
    socle: Subspace
    maximal_ideal: Subspace
    fitting: tuple
    primary: tuple


def cyclic_report(spec: CyclicSpec) -> CyclicReport:
    _, p = companion_and_p(spec)
    fit = fitting_decomposition_cyclic(spec)
    return CyclicReport(
        spec=spec,
        p=p,
        factorization=factor(p),
        frattini=frattini_cyclic(spec),
        maximal_subalgebras=tuple(maximal_subalgebras_cyclic(spec)),
        cartan=fit[0],
        minimal_ideals=tuple(minimal_ideals_cyclic(spec)),
        socle=socle_cyclic(spec),
        maximal_ideal=maximal_ideal_cyclic(spec),
        fitting=fit,
        primary=tuple(primary_decomposition(spec)),
    )
