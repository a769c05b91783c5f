"""Dense univariate polynomials over Q and GF(p), with factorization.

Coefficients are stored low degree first with no trailing zeros, so the zero
polynomial has ``coeffs == ()``.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable

from .exactlin import Field, QQ, _is_prime

__all__ = [
    "Polynomial",
    "Factorization",
    "poly_gcd",
    "squarefree_decomposition",
    "factor",
    "radical",
    "is_irreducible",
]


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field: Field, cs: list) -> "Polynomial":
        # cs already reduced into the field
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> "Polynomial":
        return cls(field, [0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        f = self.field
        inv = f.inv(self.coeffs[-1])
        return Polynomial._raw(f, [f.mul(c, inv) for c in self.coeffs])

    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial(self.field, (other,))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = f.add(cs[i], c)
        return Polynomial._raw(f, cs)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(f, [])
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        if f.p:
            out = [c % f.p for c in out]
        return Polynomial._raw(f, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        p = f.p
        rem = list(self.coeffs)
        db = other.degree
        inv = f.inv(other.leading)
        bc = other.coeffs
        if len(rem) - 1 < db:
            return Polynomial._raw(f, []), self
        quo = [f.zero] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            c = c * inv % p if p else c * inv
            quo[k] = c
            for j in range(db + 1):
                rem[k + j] = (rem[k + j] - c * bc[j]) % p if p else rem[k + j] - c * bc[j]
        return Polynomial._raw(f, quo), Polynomial._raw(f, rem[:db])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial(self.field, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def powmod(self, k: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial(self.field, (1,)) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def __call__(self, value):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, value), c)
        return acc

    def derivative(self) -> "Polynomial":
        f = self.field
        return Polynomial._raw(f, [f.mul(f(i), c) for i, c in enumerate(self.coeffs)][1:])

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial(self.field, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        f = self.field
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            neg = not f.p and c < 0
            a = -c if neg else c
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = f.format(a)
            elif a == 1:
                body = mono
            else:
                body = f"{f.format(a)}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(g ** m for g, m in factors)`` with monic irreducible ``g``."""

    unit: object
    factors: tuple

    def expand(self) -> Polynomial:
        field = self.factors[0][0].field if self.factors else None
        if field is None:
            raise ValueError("expand() of an empty factorization needs the field; use expand_in")
        return self.expand_in(field)

    def expand_in(self, field: Field) -> Polynomial:
        out = Polynomial(field, (self.unit,))
        for g, m in self.factors:
            out = out * g**m
        return out

    def __str__(self):
        body = " * ".join(f"({g})" if m == 1 else f"({g})^{m}" for g, m in self.factors)
        return body or "1"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _sqf_char0(f: Polynomial) -> list[tuple[Polynomial, int]]:
    # Yun's algorithm; f monic
    out = []
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f // a
    c = d // a
    i = 1
    while b.degree > 0:
        c = c - b.derivative()
        g = poly_gcd(b, c)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = c // g
        i += 1
    return out


def _pth_root(f: Polynomial) -> Polynomial:
    p = f.field.p
    # over a prime field the Frobenius is the identity on scalars
    return Polynomial._raw(f.field, list(f.coeffs[::p]))


def _sqf_charp(f: Polynomial) -> list[tuple[Polynomial, int]]:
    p = f.field.p
    pieces = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            pieces.append((fac, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        pieces.extend((g, m * p) for g, m in _sqf_charp(_pth_root(c)))
    return pieces


def _coprime_refine(pieces: list[tuple[Polynomial, int]]) -> list[tuple[Polynomial, int]]:
    pieces = [pc for pc in pieces if pc[0].degree > 0]
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(range(len(pieces)), 2):
            g1, m1 = pieces[a]
            g2, m2 = pieces[b]
            h = poly_gcd(g1, g2)
            if h.degree > 0:
                rest = [pc for k, pc in enumerate(pieces) if k not in (a, b)]
                rest += [(g1 // h, m1), (g2 // h, m2), (h, m1 + m2)]
                pieces = [pc for pc in rest if pc[0].degree > 0]
                changed = True
                break
    grouped: dict[int, Polynomial] = {}
    for g, m in pieces:
        grouped[m] = grouped[m] * g if m in grouped else g
    return sorted(((g.monic(), m) for m, g in grouped.items()), key=lambda t: t[1])


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Pairwise coprime squarefree ``g_i`` with ``monic(f) == prod g_i ** i``.

    Sorted by multiplicity.  Works in any characteristic; over GF(p) the
    inseparable part is handled by extracting p-th roots.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    if f.field.p:
        return _coprime_refine(_sqf_charp(f))
    return _sqf_char0(f)


# ---------------------------------------------------------------------------
# GF(p) factorization
# ---------------------------------------------------------------------------


def _seeded_rng(f: Polynomial) -> random.Random:
    data = repr((f.field.p, f.coeffs)).encode()
    return random.Random(int.from_bytes(hashlib.sha256(data).digest()[:8], "big"))


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split squarefree monic ``f`` into products of irreducibles of equal degree."""
    p = f.field.p
    x = Polynomial.x(f.field)
    out = []
    h = x % f
    i = 1
    while f.degree >= 2 * i:
        h = h.powmod(p, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus splitting of ``f`` (monic, squarefree, all factors of degree ``d``)."""
    if f.degree == d:
        return [f]
    field = f.field
    p = field.p
    n = f.degree
    while True:
        a = Polynomial._raw(field, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        g = poly_gcd(f, a)
        if 0 < g.degree < n:
            break
        if p == 2:
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((p**d - 1) // 2, f) - 1
        g = poly_gcd(f, b)
        if 0 < g.degree < n:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _factor_squarefree_gfp(f: Polynomial) -> list[Polynomial]:
    rng = _seeded_rng(f)
    out = []
    for g, d in _distinct_degree(f):
        out.extend(_equal_degree(g, d, rng))
    return out


# ---------------------------------------------------------------------------
# Q factorization: factor modulo a prime above the coefficient bound and
# recombine the modular factors (no Hensel lifting at these degrees)
# ---------------------------------------------------------------------------


def _primitive_int(f: Polynomial) -> list[int]:
    den = reduce(math.lcm, (Fraction(c).denominator for c in f.coeffs), 1)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = reduce(math.gcd, ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_divide(a: list[int], b: list[int]) -> list[int] | None:
    """Exact quotient a / b in Z[x], or None."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    quo = [0] * (len(a) - db)
    lb = b[-1]
    for k in range(len(a) - 1 - db, -1, -1):
        c, r = divmod(a[k + db], lb)
        if r:
            return None
        quo[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    if any(a[:db]):
        return None
    return quo


def _next_prime(m: int) -> int:
    m = max(m, 2)
    while not _is_prime(m):
        m += 1
    return m


def _factor_squarefree_int(g: list[int]) -> list[list[int]]:
    """Irreducible primitive factors in Z[x] of squarefree primitive ``g``."""
    deg = len(g) - 1
    if deg <= 1:
        return [g]
    norm = math.isqrt(sum(c * c for c in g)) + 1
    bound = 2 * abs(g[-1]) * (2**deg) * norm + 1
    p = _next_prime(bound)
    while True:
        fp = Field(p)
        gp = Polynomial(fp, g)
        if gp.degree == deg and poly_gcd(gp, gp.derivative()).degree == 0:
            break
        p = _next_prime(p + 1)
    modular = sorted(_factor_squarefree_gfp(gp.monic()), key=Polynomial.sort_key)
    half = p // 2

    def sym(c):
        return c - p if c > half else c

    found = []
    rest = g
    s = 1
    while 2 * s <= len(modular):
        hit = None
        lc = rest[-1]
        for combo in itertools.combinations(range(len(modular)), s):
            prod = Polynomial(fp, (lc,))
            for k in combo:
                prod = prod * modular[k]
            cand = [sym(c) for c in prod.coeffs]
            cont = reduce(math.gcd, cand)
            cand = [c // cont for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            quo = _int_divide(rest, cand)
            if quo is not None:
                hit = combo, cand, quo
                break
        if hit is None:
            s += 1
            continue
        combo, cand, quo = hit
        found.append(cand)
        rest = quo
        modular = [m for k, m in enumerate(modular) if k not in combo]
    found.append(rest)
    return found


def _factor_squarefree_q(f: Polynomial) -> list[Polynomial]:
    g = _primitive_int(f)
    out = []
    # strip the factor x first: cheap and keeps the bound small
    while g[0] == 0:
        out.append(Polynomial.x(f.field))
        g = g[1:]
    if len(g) > 1:
        out.extend(Polynomial(QQ, c).monic() for c in _factor_squarefree_int(g))
    return out


def factor(f: Polynomial) -> Factorization:
    """Factor into monic irreducibles over the coefficient field.

    Factors are sorted by ``(degree, coefficients)``.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.leading
    counts: dict[Polynomial, int] = {}
    splitter = _factor_squarefree_gfp if f.field.p else _factor_squarefree_q
    for g, m in squarefree_decomposition(f):
        for h in splitter(g):
            counts[h] = counts.get(h, 0) + m
    factors = tuple(sorted(counts.items(), key=lambda t: t[0].sort_key()))
    return Factorization(unit, factors)


def radical(f: Polynomial) -> Polynomial:
    """Product of the distinct monic irreducible factors of ``f``."""
    if f.is_zero():
        raise ValueError("radical of the zero polynomial")
    out = Polynomial(f.field, (1,))
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def is_irreducible(f: Polynomial) -> bool:
    if f.degree < 1:
        return False
    fac = factor(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
