from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leibniz.exactlin import GF, QQ, Subspace, apply_poly
from leibniz.leibcore import (
    is_cartan,
    is_ideal,
    is_leibniz,
    is_nilpotent_subalgebra,
    is_subalgebra,
    nilpotency_class,
    product_space,
)
from leibniz.cyclic import (
    CyclicSpec,
    build_cyclic,
    cartan_cyclic,
    companion_and_p,
    cyclic_report,
    fitting_decomposition_cyclic,
    frattini_cyclic,
    is_frattini_trivial,
    maximal_ideal_cyclic,
    maximal_subalgebras_cyclic,
    minimal_ideals_cyclic,
    primary_decomposition,
    socle_cyclic,
)
from leibniz.unipoly import Polynomial

from conftest import scalars


def _spec(field, alphas):
    return CyclicSpec.of(field, alphas)


def _span(field, n, *vs):
    return Subspace.span(field, n, vs)


def test_build_matches_products():
    A, spec = build_cyclic(QQ, [Fraction(1, 2), 3])
    a, a2, a3 = A.basis()
    assert (a * a).coords == a2.coords and (a * a2).coords == a3.coords
    assert (a * a3).coords == (0, Fraction(1, 2), 3)
    assert all((x * y).is_zero() for x in (a2, a3) for y in A.basis())
    assert A.labels == ("a", "a^2", "a^3")
    T, p = companion_and_p(spec)
    assert T == A.left_matrices[0]
    assert apply_poly(T, p).is_zero()
    assert str(p) == "x^3 - 3*x^2 - 1/2*x"


def test_idempotent_example_over_q():
    spec = _spec(QQ, [1])
    _, p = companion_and_p(spec)
    assert p == Polynomial(QQ, [0, -1, 1])
    assert frattini_cyclic(spec).is_zero()
    assert is_frattini_trivial(spec)
    assert cartan_cyclic(spec) == _span(QQ, 2, (1, -1))
    assert set(maximal_subalgebras_cyclic(spec)) == {_span(QQ, 2, (0, 1)), _span(QQ, 2, (1, -1))}
    assert fitting_decomposition_cyclic(spec) == (_span(QQ, 2, (1, -1)), _span(QQ, 2, (0, 1)))
    assert minimal_ideals_cyclic(spec) == [_span(QQ, 2, (0, 1))]
    assert maximal_ideal_cyclic(spec) == _span(QQ, 2, (0, 1))


def test_nilpotent_example_over_q():
    spec = _spec(QQ, [0])
    A, _ = build_cyclic(QQ, [0])
    assert nilpotency_class(A) == 2
    assert frattini_cyclic(spec) == _span(QQ, 2, (0, 1))
    assert not is_frattini_trivial(spec)
    assert maximal_subalgebras_cyclic(spec) == [_span(QQ, 2, (0, 1))]
    assert cartan_cyclic(spec).is_full()
    assert minimal_ideals_cyclic(spec) == [_span(QQ, 2, (0, 1))]
    assert socle_cyclic(spec) == _span(QQ, 2, (0, 1))


def test_split_cubic_over_gf3():
    rep = cyclic_report(_spec(GF(3), [1, 0]))
    assert [g.degree for g, _ in rep.factorization.factors] == [1, 1, 1]
    assert len(rep.maximal_subalgebras) == 3
    assert rep.frattini.is_zero()


def test_dimension_one():
    spec = _spec(QQ, [])
    A, _ = build_cyclic(QQ, [])
    assert A.dim == 1 and A.is_abelian()
    assert maximal_subalgebras_cyclic(spec) == [Subspace.zero(QQ, 1)]
    assert minimal_ideals_cyclic(spec) == [] and socle_cyclic(spec).is_zero()
    assert maximal_ideal_cyclic(spec).is_zero()


def test_primary_blocks_sum_to_whole():
    spec = _spec(GF(2), [1, 1, 0, 1])  # p = x^5 + x^4 + x^2 + x over GF(2)
    blocks = primary_decomposition(spec)
    assert blocks[0].factor == Polynomial.x(GF(2))
    total = Subspace.zero(GF(2), spec.n)
    for b in blocks:
        assert b.component.dim == b.factor.degree * b.multiplicity
        assert all(x < y for x, y in zip(b.chain, b.chain[1:]))
        total = total + b.component
    assert total.is_full()


def _check_closed_forms(spec):
    A, _ = build_cyclic(spec.field, spec.alphas)
    assert is_leibniz(A)[0]
    full = A.full_space()
    A2 = product_space(A, full, full)
    assert maximal_ideal_cyclic(spec) == A2
    null, one = fitting_decomposition_cyclic(spec)
    assert (null + one).is_full() and (null & one).is_zero()
    assert is_nilpotent_subalgebra(A, null)
    assert one <= A2
    assert product_space(A, null, one) == one
    assert product_space(A, one, full).is_zero()
    assert is_cartan(A, cartan_cyclic(spec))
    facs = primary_decomposition(spec)
    for M, block in zip(maximal_subalgebras_cyclic(spec), facs):
        assert is_subalgebra(A, M) and A.dim - M.dim == block.factor.degree
    for I in minimal_ideals_cyclic(spec):
        assert is_ideal(A, I) and not I.is_zero()
    phi = frattini_cyclic(spec)
    for M in maximal_subalgebras_cyclic(spec):
        assert phi <= M


def test_closed_form_invariants_random_rational():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        alphas = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.7 else 0 for _ in range(n - 1)]
        _check_closed_forms(_spec(QQ, alphas))


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (5, 3)])
def test_closed_form_invariants_exhaustive(p, n):
    for alphas in itertools.product(range(p), repeat=n - 1):
        _check_closed_forms(_spec(GF(p), alphas))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_frattini_trivial_iff_squarefree(data):
    field = data.draw(st.sampled_from([QQ, GF(2), GF(3)]))
    alphas = data.draw(st.lists(scalars(field, 3), max_size=4))
    spec = _spec(field, alphas)
    assert is_frattini_trivial(spec) == frattini_cyclic(spec).is_zero()
