from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from leibniz.exactlin import GF, QQ
from leibniz.unipoly import (
    Polynomial,
    factor,
    is_irreducible,
    poly_gcd,
    radical,
    squarefree_decomposition,
)

from conftest import FIELDS, scalars

X = sympy.Symbol("x")


def _to_sympy(f: Polynomial):
    return sum(sympy.Rational(int(Fraction(c).numerator), int(Fraction(c).denominator)) * X**i
               for i, c in enumerate(f.coeffs))


def _from_sympy(field, expr) -> Polynomial:
    cs = sympy.Poly(expr, X).all_coeffs()[::-1]
    return Polynomial(field, [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs])


def _sympy_factors(f: Polynomial) -> dict:
    if f.field.p:
        _, facs = sympy.Poly(_to_sympy(f), X, modulus=f.field.p).factor_list()
    else:
        _, facs = sympy.factor_list(_to_sympy(f), X)
    out = {}
    for g, m in facs:
        g = _from_sympy(f.field, g.as_expr() if hasattr(g, "as_expr") else g).monic()
        out[g] = out.get(g, 0) + m
    return out


polys = st.builds(lambda cs: cs, st.lists(st.integers(-6, 6), min_size=1, max_size=8))


def test_examples():
    x = Polynomial.x(QQ)
    assert dict(factor(x**2 - x).factors) == {x: 1, x - 1: 1}
    assert factor(x**2).factors == ((x, 2),)
    g3 = Polynomial.x(GF(3))
    assert dict(factor(g3**3 - g3).factors) == {g3: 1, g3 - 1: 1, g3 + 1: 1}
    with pytest.raises(ValueError):
        factor(Polynomial(QQ, []))


def test_str():
    f = Polynomial(QQ, [0, Fraction(-1, 2), 0, 1])
    assert str(f) == "x^3 - 1/2*x"
    assert str(Polynomial(GF(3), [0, -1, 0, 1])) == "x^3 + 2*x"
    assert str(Polynomial(QQ, [])) == "0"


def test_division_and_gcd():
    x = Polynomial.x(QQ)
    a = (x - 1) ** 2 * (x + 2)
    b = (x - 1) * (x**2 + 1)
    assert poly_gcd(a, b) == x - 1
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree
    with pytest.raises(ZeroDivisionError):
        divmod(a, Polynomial(QQ, []))


def test_radical_and_irreducible():
    x = Polynomial.x(GF(2))
    assert radical(x**3 * (x + 1) ** 2) == x * (x + 1)
    assert is_irreducible(x**2 + x + 1)
    assert not is_irreducible(x**2 + 1)  # (x + 1)^2 in characteristic 2
    assert is_irreducible(Polynomial.x(QQ) ** 2 - 2)


def test_pth_power_squarefree():
    # x^p - x splits into all linear factors; (x^p - x)^p needs the p-th root step
    for p in (2, 3, 5):
        x = Polynomial.x(GF(p))
        f = (x**p - x) ** p
        fac = factor(f)
        assert len(fac.factors) == p and all(m == p for _, m in fac.factors)
        assert squarefree_decomposition(f) == [(x**p - x, p)]


@settings(max_examples=150, deadline=None)
@given(polys, st.sampled_from([0, 2, 3, 5, 7]))
def test_factor_matches_sympy(cs, p):
    field = GF(p) if p else QQ
    f = Polynomial(field, cs)
    if f.is_zero():
        return
    fac = factor(f)
    assert fac.expand_in(field) == f
    assert dict(fac.factors) == _sympy_factors(f)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_factor_reexpansion_bulk(field):
    rng = random.Random(str(field))
    for _ in range(1000):
        deg = rng.randint(0, 8)
        if field.p:
            cs = [rng.randrange(field.p) for _ in range(deg)] + [rng.randrange(1, field.p)]
        else:
            cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(deg)] + [rng.randint(1, 5)]
        f = Polynomial(field, cs)
        fac = factor(f)
        assert fac.expand_in(field) == f
        for g, _ in fac.factors:
            assert g.leading == 1 and g.degree >= 1


@pytest.mark.parametrize("p", [2, 3])
def test_irreducible_count_matches_necklace_formula(p):
    # number of monic irreducibles of degree d over GF(p)
    def count(d):
        return sum(sympy.mobius(d // e) * p**e for e in sympy.divisors(d)) // d

    field = GF(p)
    for d in (1, 2, 3, 4):
        monics = (Polynomial(field, list(cs) + [1]) for cs in itertools.product(range(p), repeat=d))
        assert sum(is_irreducible(f) for f in monics) == count(d)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_squarefree_parts_multiply_back(field, data):
    cs = data.draw(st.lists(scalars(field), min_size=2, max_size=6))
    f = Polynomial(field, cs)
    if f.degree < 1:
        return
    f = f.monic()
    prod = Polynomial(field, [1])
    for g, m in squarefree_decomposition(f):
        assert poly_gcd(g, g.derivative()).degree == 0
        prod = prod * g**m
    assert prod == f


def test_factor_large_rational_coefficients():
    x = Polynomial.x(QQ)
    f = (x - Fraction(3, 7)) * (x**2 + 101) * (x**3 - 2) ** 2
    fac = factor(f)
    assert dict(fac.factors) == {x - Fraction(3, 7): 1, x**2 + 101: 1, x**3 - 2: 2}


@pytest.mark.parametrize("p", [2, 3])
def test_factors_survive_divisor_scan(p):
    field = GF(p)
    rng = random.Random(p)
    divisors = {d: [Polynomial(field, list(cs) + [1]) for cs in itertools.product(range(p), repeat=d)]
                for d in (1, 2, 3)}
    for _ in range(150):
        f = Polynomial(field, [rng.randrange(p) for _ in range(6)] + [1])
        for g, _ in factor(f).factors:
            for d in range(1, g.degree // 2 + 1):
                assert not any(h.divides(g) for h in divisors[d]), (f, g)


def test_rational_factors_have_no_rational_roots():
    rng = random.Random(0)
    for _ in range(100):
        f = Polynomial(QQ, [rng.randint(-5, 5) for _ in range(7)] + [1])
        for g, _ in factor(f).factors:
            if g.degree < 2:
                continue
            # rational root theorem on the cleared integer polynomial
            den = math.lcm(*(Fraction(c).denominator for c in g.coeffs))
            ints = [int(c * den) for c in g.coeffs]
            for a in sympy.divisors(abs(ints[0])) if ints[0] else [0]:
                for b in sympy.divisors(abs(ints[-1])):
                    for r in (Fraction(a, b), Fraction(-a, b)):
                        assert g(r) != 0
