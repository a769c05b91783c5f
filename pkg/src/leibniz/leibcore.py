"""Left Leibniz algebras given by structure constants.

``A.sc[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``.  The identity
checked everywhere is the left one, ``x(yz) = (xy)z + y(xz)``, i.e. every left
multiplication is a derivation.

Subspaces of ``A`` are :class:`~leibniz.exactlin.Subspace` values in the
coordinate space of the standard basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import Field, Matrix, Subspace, preimage

__all__ = [
    "LeibnizAlgebra",
    "Element",
    "SeriesReport",
    "QuotientMap",
    "multiply",
    "is_leibniz",
    "product_space",
    "lower_central_series",
    "nilpotency_class",
    "is_nilpotent",
    "is_nilpotent_subalgebra",
    "subalgebra_class",
    "center",
    "left_center",
    "right_center",
    "upper_central_series",
    "r_series",
    "is_subalgebra",
    "is_ideal",
    "normalizer",
    "right_normalizer",
    "normal_closure",
    "subalgebra_generated",
    "induced_algebra",
    "quotient",
    "is_cartan",
]


class LeibnizAlgebra:
    """Finite-dimensional algebra with structure constants ``sc[i][j][k]``.

    With ``check=True`` (the default) the left Leibniz identity is verified on
    all basis triples and a :class:`ValueError` naming a violating triple is
    raised on failure.  ``check=False`` is for census replay, where tables
    were already filtered.
    """

    __slots__ = ("field", "dim", "sc", "labels", "_lmats", "_rmats")

    def __init__(self, field: Field, dim: int, sc: Sequence, labels: Sequence[str] | None = None,
                 check: bool = True):
        if dim < 0:
            raise ValueError("negative dimension")
        table = tuple(
            tuple(tuple(field(sc[i][j][k]) for k in range(dim)) for j in range(dim)) for i in range(dim)
        )
        self.field = field
        self.dim = dim
        self.sc = table
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        self._lmats = None
        self._rmats = None
        if check:
            ok, witness = is_leibniz(self)
            if not ok:
                raise ValueError(f"Leibniz identity fails on basis triple {witness}")

    @classmethod
    def from_products(cls, field: Field, dim: int, products: dict, **kw) -> "LeibnizAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with 0-based indices; omitted products are zero."""
        sc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                sc[i][j][k] = c
        return cls(field, dim, sc, **kw)

    @classmethod
    def abelian(cls, field: Field, dim: int) -> "LeibnizAlgebra":
        return cls(field, dim, [[[0] * dim for _ in range(dim)] for _ in range(dim)], check=False)

    @property
    def left_matrices(self) -> tuple[Matrix, ...]:
        """``L_{e_i}``: column ``j`` holds ``e_i e_j``."""
        if self._lmats is None:
            n = self.dim
            self._lmats = tuple(
                Matrix(self.field, tuple(tuple(self.sc[i][j][k] for j in range(n)) for k in range(n)), n)
                for i in range(n)
            )
        return self._lmats

    @property
    def right_matrices(self) -> tuple[Matrix, ...]:
        """``R_{e_j}``: column ``i`` holds ``e_i e_j``."""
        if self._rmats is None:
            n = self.dim
            self._rmats = tuple(
                Matrix(self.field, tuple(tuple(self.sc[i][j][k] for i in range(n)) for k in range(n)), n)
                for j in range(n)
            )
        return self._rmats

    def left_matrix(self, x: Sequence) -> Matrix:
        n = self.dim
        return Matrix.from_columns(self.field, [self.mul(x, e) for e in self.basis_vectors()], n)

    def right_matrix(self, y: Sequence) -> Matrix:
        n = self.dim
        return Matrix.from_columns(self.field, [self.mul(e, y) for e in self.basis_vectors()], n)

    def basis_vectors(self) -> list[tuple]:
        one, zero = self.field.one, self.field.zero
        return [tuple(one if i == j else zero for j in range(self.dim)) for i in range(self.dim)]

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear product of coordinate vectors."""
        n = self.dim
        p = self.field.p
        out = [0] * n if p else [Fraction(0)] * n
        sc = self.sc
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            row = sc[i]
            for j in range(n):
                yj = y[j]
                if not yj:
                    continue
                c = xi * yj
                v = row[j]
                for k in range(n):
                    if v[k]:
                        out[k] += c * v[k]
        if p:
            return tuple(a % p for a in out)
        return tuple(out)

    def element(self, coords: Sequence) -> "Element":
        return Element(self, tuple(self.field(c) for c in coords))

    def basis(self) -> list["Element"]:
        return [Element(self, v) for v in self.basis_vectors()]

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, (tuple(self.field(c) for c in v) for v in vectors))

    def is_abelian(self) -> bool:
        return not any(c for plane in self.sc for row in plane for c in row)

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self.sc == other.sc

    def __hash__(self):
        return hash((self.field, self.dim, self.sc))

    def __repr__(self):
        return f"LeibnizAlgebra({self.field}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    algebra: LeibnizAlgebra
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise ValueError(f"element has {len(self.coords)} coordinates, algebra has dim {self.algebra.dim}")

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self.algebra, self, other)

    def __add__(self, other: "Element") -> "Element":
        f = self.algebra.field
        return Element(self.algebra, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        f = self.algebra.field
        return Element(self.algebra, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Element":
        f = self.algebra.field
        c = f(c)
        return Element(self.algebra, tuple(f.mul(c, a) for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def _coords(A: LeibnizAlgebra, x) -> tuple:
    if isinstance(x, Element):
        if x.algebra is not A and x.algebra != A:
            raise ValueError("element belongs to a different algebra")
        return x.coords
    if len(x) != A.dim:
        raise ValueError(f"vector length {len(x)} != dim {A.dim}")
    return tuple(x)


def multiply(A: LeibnizAlgebra, x, y) -> Element:
    return Element(A, A.mul(_coords(A, x), _coords(A, y)))


def is_leibniz(A: LeibnizAlgebra) -> tuple[bool, tuple[int, int, int] | None]:
    """Check ``e_i(e_j e_k) = (e_i e_j) e_k + e_j (e_i e_k)`` on every basis triple."""
    basis = A.basis_vectors()
    sc = A.sc
    f = A.field
    mul = A.mul
    for i in range(A.dim):
        for j in range(A.dim):
            eij = sc[i][j]
            for k in range(A.dim):
                lhs = mul(basis[i], sc[j][k])
                r1 = mul(eij, basis[k])
                r2 = mul(basis[j], sc[i][k])
                if any(f.sub(a, f.add(b, c)) for a, b, c in zip(lhs, r1, r2)):
                    return False, (i, j, k)
    return True, None


def _check_space(A: LeibnizAlgebra, U: Subspace):
    if U.ambient_dim != A.dim:
        raise ValueError(f"subspace lives in dimension {U.ambient_dim}, algebra has dim {A.dim}")
    if U.field != A.field:
        raise ValueError(f"subspace over {U.field}, algebra over {A.field}")


def product_space(A: LeibnizAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """``span{u v : u in U, v in V}``."""
    _check_space(A, U)
    _check_space(A, V)
    mul = A.mul
    return Subspace.span(A.field, A.dim, [mul(u, v) for u in U.basis for v in V.basis])


@dataclass(frozen=True)
class SeriesReport:
    """Terms of a central-type series.

    When the series gets stuck before its natural end (0 for the lower
    central series, ``A`` for the ascending ones) the repeated term is
    appended once more and ``stabilized`` is True.
    """

    kind: str
    terms: tuple
    stabilized: bool
    class_or_depth: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def lower_central_series(A: LeibnizAlgebra) -> SeriesReport:
    full = A.full_space()
    terms = [full]
    stabilized = False
    for _ in range(A.dim + 1):
        cur = terms[-1]
        if cur.is_zero():
            break
        nxt = product_space(A, full, cur)
        terms.append(nxt)
        if nxt == cur:
            stabilized = True
            break
    cls = None if stabilized else len(terms) - 1
    return SeriesReport("lower_central", tuple(terms), stabilized, cls)


def _lower_series_of(A: LeibnizAlgebra, U: Subspace) -> list[Subspace]:
    terms = [U]
    for _ in range(U.dim + 1):
        cur = terms[-1]
        if cur.is_zero():
            break
        nxt = product_space(A, U, cur)
        if nxt == cur:
            terms.append(nxt)
            break
        terms.append(nxt)
    return terms


def is_nilpotent_subalgebra(A: LeibnizAlgebra, U: Subspace) -> bool:
    """Nilpotency of the subalgebra ``U`` as an algebra in its own right."""
    return _lower_series_of(A, U)[-1].is_zero()


def subalgebra_class(A: LeibnizAlgebra, U: Subspace) -> int | None:
    terms = _lower_series_of(A, U)
    return len(terms) - 1 if terms[-1].is_zero() else None


def nilpotency_class(A: LeibnizAlgebra) -> int | None:
    """Smallest ``t`` with ``A^{t+1} = 0``; ``None`` when ``A`` is not nilpotent."""
    rep = lower_central_series(A)
    t = rep.class_or_depth
    if t is not None and t > 0:
        assert rep.terms[t - 1] <= center(A), "last nonzero power must be central"
    return t


def is_nilpotent(A: LeibnizAlgebra) -> bool:
    return nilpotency_class(A) is not None


def right_center(A: LeibnizAlgebra) -> Subspace:
    """``{z : A z = 0}``."""
    return preimage(A.left_matrices, A.zero_space()) if A.dim else A.zero_space()


def left_center(A: LeibnizAlgebra) -> Subspace:
    """``{z : z A = 0}``."""
    return preimage(A.right_matrices, A.zero_space()) if A.dim else A.zero_space()


def center(A: LeibnizAlgebra) -> Subspace:
    if not A.dim:
        return A.zero_space()
    return preimage(A.left_matrices + A.right_matrices, A.zero_space())


def _ascending(A: LeibnizAlgebra, kind: str, maps: Sequence[Matrix]) -> SeriesReport:
    full = A.full_space()
    if not A.dim:
        return SeriesReport(kind, (full,), False, 0)
    terms = [preimage(maps, A.zero_space())]
    stabilized = False
    for _ in range(A.dim + 1):
        cur = terms[-1]
        if cur.is_full():
            break
        nxt = preimage(maps, cur)
        terms.append(nxt)
        if nxt == cur:
            stabilized = True
            break
    depth = None if stabilized else len(terms)
    return SeriesReport(kind, tuple(terms), stabilized, depth)


def upper_central_series(A: LeibnizAlgebra) -> SeriesReport:
    """``Z_1`` = center, ``Z_{j+1} = {z : Az, zA in Z_j}``."""
    return _ascending(A, "upper_central", A.left_matrices + A.right_matrices)


def r_series(A: LeibnizAlgebra) -> SeriesReport:
    """``R_1`` = right center, ``R_{j+1} = {r : A r in R_j}``; each term is a left ideal."""
    rep = _ascending(A, "r_series", A.left_matrices)
    full = A.full_space()
    for t in rep.terms:
        assert product_space(A, full, t) <= t, "R-series term is not a left ideal"
    return rep


def is_subalgebra(A: LeibnizAlgebra, U: Subspace) -> bool:
    return product_space(A, U, U) <= U


def is_ideal(A: LeibnizAlgebra, U: Subspace, side: str = "two_sided") -> bool:
    """``side`` is ``"left"`` (A U in U), ``"right"`` (U A in U) or ``"two_sided"``."""
    if side not in ("left", "right", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    full = A.full_space()
    if side in ("left", "two_sided") and not product_space(A, full, U) <= U:
        return False
    if side in ("right", "two_sided") and not product_space(A, U, full) <= U:
        return False
    return True


def normalizer(A: LeibnizAlgebra, U: Subspace) -> Subspace:
    """Two-sided normalizer ``{x : xU in U and Ux in U}`` of a subalgebra."""
    if not is_subalgebra(A, U):
        raise ValueError("normalizer is only defined for subalgebras")
    maps = []
    for u in U.basis:
        maps.append(A.left_matrix(u))   # x -> u x
        maps.append(A.right_matrix(u))  # x -> x u
    if not maps:
        return A.full_space()
    return preimage(maps, U)


def right_normalizer(A: LeibnizAlgebra, U: Subspace) -> Subspace:
    """``{x : U x in U}``."""
    _check_space(A, U)
    maps = [A.left_matrix(u) for u in U.basis]
    if not maps:
        return A.full_space()
    return preimage(maps, U)


def normal_closure(A: LeibnizAlgebra, S: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``S``."""
    _check_space(A, S)
    full = A.full_space()
    U = S
    for _ in range(A.dim + 1):
        nxt = U + product_space(A, full, U) + product_space(A, U, full)
        if nxt == U:
            return U
        U = nxt
    return U


def subalgebra_generated(A: LeibnizAlgebra, gens: Iterable) -> Subspace:
    U = A.span(_coords(A, g) for g in gens)
    for _ in range(A.dim + 1):
        nxt = U + product_space(A, U, U)
        if nxt == U:
            return U
        U = nxt
    return U


def induced_algebra(A: LeibnizAlgebra, U: Subspace) -> LeibnizAlgebra:
    """The subalgebra ``U`` as an algebra on its stored RREF basis."""
    if not is_subalgebra(A, U):
        raise ValueError("not a subalgebra")
    basis = U.basis
    sc = [[U.coordinates(A.mul(u, v)) for v in basis] for u in basis]
    return LeibnizAlgebra(A.field, len(basis), sc, check=False)


@dataclass(frozen=True)
class QuotientMap:
    """Projection ``A -> A/I`` onto the non-pivot standard coordinates of ``I``."""

    ideal: Subspace
    free: tuple

    def __call__(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.free)

    def image(self, U: Subspace) -> Subspace:
        return Subspace.span(U.field, len(self.free), [self(v) for v in U.basis])


def quotient(A: LeibnizAlgebra, I: Subspace) -> tuple[LeibnizAlgebra, QuotientMap]:
    if not is_ideal(A, I):
        raise ValueError("quotient needs a two-sided ideal")
    piv = set(I.pivots)
    free = tuple(c for c in range(A.dim) if c not in piv)
    proj = QuotientMap(I, free)
    basis = A.basis_vectors()
    sc = [[proj(A.mul(basis[a], basis[b])) for b in free] for a in free]
    return LeibnizAlgebra(A.field, len(free), sc, check=False), proj


def is_cartan(A: LeibnizAlgebra, U: Subspace) -> bool:
    """Nilpotent and self-normalizing (two-sided normalizer)."""
    if not is_subalgebra(A, U):
        raise ValueError("is_cartan needs a subalgebra")
    return is_nilpotent_subalgebra(A, U) and normalizer(A, U) == U
