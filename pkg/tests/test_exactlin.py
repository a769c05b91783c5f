from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from leibniz.exactlin import (
    GF,
    QQ,
    Field,
    Matrix,
    Subspace,
    apply_poly,
    fitting_components,
    null_space,
    preimage,
    rref,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from leibniz.unipoly import Polynomial

from conftest import FIELDS, matrices, vector_lists


def _sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])


def _brute_kernel(m: Matrix) -> set:
    f = m.field
    return {v for v in itertools.product(range(f.p), repeat=m.ncols) if not any(m.apply(v))}


# Ex: L_a for the 2-dim algebra with a a = a^2, a a^2 = a^2
L_A = Matrix.from_columns(QQ, [(0, 1), (0, 1)])


def test_field_rejects_non_prime():
    for p in (1, 4, 9, 15):
        with pytest.raises(ValueError):
            Field(p)
    assert GF(7).p == 7 and str(QQ) == "Q" and str(GF(3)) == "GF(3)"


def test_field_arithmetic():
    f = GF(5)
    assert f.inv(2) == 3 and f.div(1, 3) == 2 and f(-1) == 4
    assert QQ("1/2") + QQ("1/3") == Fraction(5, 6)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rref_example():
    m = Matrix(QQ, ((2, 4, 2), (1, 2, 3)))
    r, piv = rref(m)
    assert piv == [0, 2]
    assert r.rows == ((1, 2, 0), (0, 0, 1))


def test_null_space_examples():
    assert null_space(Matrix.identity(QQ, 3)).is_zero()
    assert null_space(Matrix.zeros(GF(2), 3, 3)).is_full()
    assert null_space(L_A) == Subspace.span(QQ, 2, [(1, -1)])


def test_subspace_sum_example():
    h = Subspace.span(QQ, 2, [(1, -1)])
    a2 = Subspace.span(QQ, 2, [(0, 1)])
    assert (h + a2).is_full()
    assert h + Subspace.zero(QQ, 2) == h and h + h == h
    assert (h & a2).is_zero()


def test_apply_poly_annihilates():
    p = Polynomial(QQ, [0, -1, 1])  # x^2 - x
    assert apply_poly(L_A, p).is_zero()
    assert apply_poly(L_A, Polynomial.x(QQ)) == L_A
    assert apply_poly(L_A, Polynomial(QQ, [1])) == Matrix.identity(QQ, 2)
    with pytest.raises(ValueError):
        apply_poly(L_A, Polynomial(GF(2), [1]))


def test_fitting_examples():
    null, one = fitting_components(L_A)
    assert null == Subspace.span(QQ, 2, [(1, -1)])
    assert one == Subspace.span(QQ, 2, [(0, 1)])
    nil = Matrix(GF(3), ((0, 1), (0, 0)))
    assert fitting_components(nil)[0].is_full()
    assert fitting_components(Matrix.identity(GF(3), 2))[1].is_full()


def test_preimage_is_annihilator_kernel():
    f = GF(2)
    maps = [Matrix(f, ((0, 1, 0), (0, 0, 1), (0, 0, 0)))]
    target = Subspace.span(f, 3, [(1, 0, 0)])
    assert preimage(maps, target) == Subspace.span(f, 3, [(1, 0, 0), (0, 1, 0)])


@given(matrices(QQ, 4, 5))
def test_rank_and_kernel_match_sympy(m):
    s = _sympy(m)
    assert m.rank() == s.rank()
    ker = null_space(m)
    assert ker.dim == len(s.nullspace())
    for v in ker.basis:
        assert not any(m.apply(v))
    rm, _ = rref(m)
    assert _sympy(rm) == s.rref()[0]


@pytest.mark.parametrize("p", [2, 3])
@settings(max_examples=40)
@given(data=st.data())
def test_kernel_matches_enumeration(p, data):
    m = data.draw(matrices(GF(p), 3, 3))
    assert set(null_space(m).elements()) == _brute_kernel(m)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_rref_idempotent(field, data):
    m = data.draw(matrices(field))
    r, piv = rref(m)
    r2, piv2 = rref(r)
    assert r == r2 and piv == piv2


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_dimension_formula(field, data):
    n = data.draw(st.integers(1, 5))
    u = Subspace.span(field, n, data.draw(vector_lists(field, n)))
    v = Subspace.span(field, n, data.draw(vector_lists(field, n)))
    s, i = subspace_sum(u, v), subspace_intersect(u, v)
    assert u.dim + v.dim == s.dim + i.dim
    assert u <= s and v <= s and i <= u and i <= v
    for w in i.basis:
        assert subspace_contains(u, w) and subspace_contains(v, w)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_kernel_grows_with_multiples(field, data):
    m = data.draw(matrices(field, rows=3, cols=3))
    f = Polynomial(field, data.draw(st.lists(st.integers(-2, 2), min_size=1, max_size=3)))
    g = Polynomial(field, data.draw(st.lists(st.integers(-2, 2), min_size=1, max_size=3)))
    assert null_space(apply_poly(m, f)) <= null_space(apply_poly(m, f * g))


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(data=st.data())
def test_fitting_components_complementary(field, data):
    m = data.draw(matrices(field, rows=3, cols=3))
    null, one = fitting_components(m)
    assert (null + one).is_full() and (null & one).is_zero()
    for U in (null, one):
        assert all(m.apply(v) in U for v in U.basis)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        Subspace.zero(QQ, 2) + Subspace.zero(QQ, 3)
