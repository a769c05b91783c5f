"""Exact scalar fields and canonical linear algebra over Q and GF(p).

Scalars are plain Python values: :class:`fractions.Fraction` over Q and
``int`` residues in ``[0, p)`` over GF(p).  The :class:`Field` object carries
the arithmetic, so vectors and matrices are just tuples of scalars.

Subspaces are always stored by their reduced row echelon basis, which makes
equality of subspaces the same thing as equality of the stored values.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Vector = tuple

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Matrix",
    "Subspace",
    "rref",
    "null_space",
    "column_space",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "preimage",
    "apply_poly",
    "fitting_components",
]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def _is_prime(p: int) -> bool:
    # Miller-Rabin; the first 13 bases are deterministic below 3.3e24
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}) is not a prime field")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, value):
        """Coerce an int, Fraction or string like ``"3/4"`` into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        if not self.p:
            raise ValueError("Q is infinite")
        return range(self.p)

    def format(self, a) -> str:
        if self.p:
            return str(a)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __str__(self):
        return f"GF({self.p})" if self.p else "Q"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------


def _rref_rows(field: Field, rows: Sequence[Sequence], ncols: int):
    """Return (nonzero RREF rows, pivot columns) of the row space of ``rows``."""
    p = field.p
    if p:
        m = [[x % p for x in r] for r in rows]
    else:
        m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        lead = row[c]
        if lead != 1:
            if p:
                inv = pow(lead, -1, p)
                row = [x * inv % p for x in row]
            else:
                row = [x / lead for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    if p:
                        m[i] = [(x - f * y) % p for x, y in zip(other, row)]
                    else:
                        m[i] = [x - f * y for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over ``field``; acts on column vectors."""

    field: Field
    rows: tuple
    ncols: int = dc_field(default=-1)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ncols < 0:
            object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int | None = None):
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        rows = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(field, rows, len(columns))

    @classmethod
    def identity(cls, field: Field, n: int):
        one, zero = field.one, field.zero
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int):
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def apply(self, v: Sequence) -> Vector:
        f = self.field
        if f.p:
            p = f.p
            return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.rows)
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        p = self.field.p
        out = []
        for r in self.rows:
            if p:
                out.append(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols))
            else:
                out.append(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols))
        return Matrix(self.field, tuple(out), other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, tuple(tuple(f.add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, tuple(tuple(f.sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, tuple(tuple(f.mul(c, a) for a in r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def rank(self) -> int:
        return len(_rref_rows(self.field, self.rows, self.ncols)[1])

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __str__(self):
        fmt = self.field.format
        return "\n".join("[" + ", ".join(fmt(a) for a in r) + "]" for r in self.rows)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (same shape, zero rows at the bottom) and pivots."""
    rows, pivots = _rref_rows(m.field, m.rows, m.ncols)
    zero = (m.field.zero,) * m.ncols
    rows = rows + [zero] * (m.nrows - len(rows))
    return Matrix(m.field, tuple(rows), m.ncols), pivots


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` held as its canonical RREF basis.

    Build instances with :meth:`span` (or :meth:`zero` / :meth:`full`); the
    raw constructor trusts that ``basis`` is already canonical.
    """

    field: Field
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows, _ = _rref_rows(field, list(vectors), ambient_dim)
        return cls(field, ambient_dim, tuple(rows))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Reduce ``v`` modulo this subspace; the result is zero on every pivot."""
        f = self.field
        p = f.p
        v = list(v)
        for row in self.basis:
            c = next(i for i, x in enumerate(row) if x)
            a = v[c]
            if a:
                if p:
                    v = [(x - a * y) % p for x, y in zip(v, row)]
                else:
                    v = [x - a * y for x, y in zip(v, row)]
        return tuple(v)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` (assumed to lie in the subspace) in the stored basis."""
        return tuple(v[c] for c in self.pivots)

    def combine(self, coords: Sequence) -> Vector:
        f = self.field
        out = [f.zero] * self.ambient_dim
        for a, row in zip(coords, self.basis):
            if a:
                out = [f.add(x, f.mul(a, y)) for x, y in zip(out, row)]
        return tuple(out)

    def annihilator(self) -> list[Vector]:
        """Rows ``w`` with ``v in self`` iff ``w . v == 0`` for every row."""
        n = self.ambient_dim
        piv = self.pivots
        free = [c for c in range(n) if c not in piv]
        f = self.field
        out = []
        # For RREF basis rows r_i with pivot c_i: x in span iff x_c == sum_i x_{c_i} r_i[c] for free c.
        for c in free:
            w = [f.zero] * n
            w[c] = f.one
            for ci, row in zip(piv, self.basis):
                w[ci] = f.neg(row[c])
            out.append(tuple(w))
        return out

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def __le__(self, other: "Subspace") -> bool:
        return all(v in other for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def elements(self) -> Iterator[Vector]:
        """Every vector of the subspace (finite fields only)."""
        f = self.field
        for coords in itertools.product(f.elements(), repeat=self.dim):
            yield self.combine(coords)

    def __str__(self):
        if not self.basis:
            return "0"
        fmt = self.field.format
        return "span{" + ", ".join("(" + ", ".join(fmt(a) for a in row) + ")" for row in self.basis) + "}"


def _check_same(u: Subspace, v: Subspace):
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {u.ambient_dim} vs {v.ambient_dim}")
    if u.field != v.field:
        raise ValueError(f"field mismatch: {u.field} vs {v.field}")


def null_space(m: Matrix) -> Subspace:
    """Kernel ``{v : m v = 0}`` as a canonical subspace of ``field^ncols``."""
    f = m.field
    n = m.ncols
    rows, pivots = _rref_rows(f, m.rows, n)
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for c in free:
        v = [f.zero] * n
        v[c] = f.one
        for row, pc in zip(rows, pivots):
            v[pc] = f.neg(row[c])
        vecs.append(v)
    return Subspace.span(f, n, vecs)


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.nrows, (m.column(j) for j in range(m.ncols)))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_same(u, v)
    if not v.basis or u.is_full():
        return u
    if not u.basis or v.is_full():
        return v
    return Subspace.span(u.field, u.ambient_dim, u.basis + v.basis)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Exact intersection: kernel of the stacked annihilator relations of both."""
    _check_same(u, v)
    if u.is_full() or not v.basis:
        return v
    if v.is_full() or not u.basis:
        return u
    rel = u.annihilator() + v.annihilator()
    return null_space(Matrix(u.field, tuple(rel), u.ambient_dim))


def subspace_contains(u: Subspace, w) -> bool:
    """Membership of a vector or inclusion of a subspace in ``u``."""
    if isinstance(w, Subspace):
        _check_same(u, w)
        return w <= u
    if len(w) != u.ambient_dim:
        raise ValueError(f"vector length {len(w)} != ambient dimension {u.ambient_dim}")
    return w in u


def preimage(maps: Iterable[Matrix], target: Subspace) -> Subspace:
    """``{v : M v in target for every M in maps}``."""
    maps = list(maps)
    f = target.field
    n = maps[0].ncols if maps else target.ambient_dim
    ann = target.annihilator()
    if not ann:
        return Subspace.full(f, n)
    rows = []
    for m in maps:
        cols = [m.column(j) for j in range(m.ncols)]
        for w in ann:
            rows.append(tuple(_dot(f, w, c) for c in cols))
    if not rows:
        return Subspace.full(f, n)
    return null_space(Matrix(f, tuple(rows), n))


def _dot(f: Field, a: Sequence, b: Sequence):
    if f.p:
        return sum(x * y for x, y in zip(a, b)) % f.p
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def apply_poly(m: Matrix, f) -> Matrix:
    """Evaluate the polynomial ``f`` at the square matrix ``m`` (Horner)."""
    if m.nrows != m.ncols:
        raise ValueError("apply_poly needs a square matrix")
    if f.field != m.field:
        raise ValueError(f"field mismatch: {f.field} vs {m.field}")
    n = m.nrows
    ident = Matrix.identity(m.field, n)
    result = Matrix.zeros(m.field, n, n)
    for c in reversed(f.coeffs):
        result = result @ m + ident.scale(c)
    return result


def fitting_components(m: Matrix) -> tuple[Subspace, Subspace]:
    """Fitting null component ``ker m^n`` and one component ``im m^n``."""
    if m.nrows != m.ncols:
        raise ValueError("fitting_components needs a square matrix")
    mn = m ** m.nrows
    return null_space(mn), column_space(mn)
