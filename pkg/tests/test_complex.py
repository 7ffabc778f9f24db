# built in modules
import fractions

# installed modules
import pytest
from hypothesis import given, strategies as st

# project modules
from bilch.augment import ChainComplex, linearize
from bilch.complex import (ComplexError, LaurentPolynomial, betti,
                           euler_characteristic, homology_basis, poincare)
from bilch.families import multicopy_complex


laurent_polynomials = st.dictionaries(
    st.integers(-5, 5), st.integers(-4, 4), max_size=6).map(LaurentPolynomial)


@pytest.mark.parametrize('coefficients, text', [
    ({-1: 1, 0: 1, 2: 1}, 't^-1 + 1 + t^2'),
    ({0: 2, 1: 1}, '2 + t'),
    ({0: 1, 1: -2}, '1 - 2*t'),
    ({1: -1}, '-t'),
    ({}, '0'),
    ({3: 3, -2: 1}, 't^-2 + 3*t^3'),
])
def test_str(coefficients, text):
    assert str(LaurentPolynomial(coefficients)) == text


@pytest.mark.parametrize('text, coefficients', [
    ('t^-1 + 1 + t^2', {-1: 1, 0: 1, 2: 1}),
    ('2t', {1: 2}),
    ('2*t^3+1', {0: 1, 3: 2}),
    ('3 - t', {0: 3, 1: -1}),
    ('t + t', {1: 2}),
    ('-t^-2', {-2: -1}),
    ('0', {}),
    ('1 + t - 1', {1: 1}),
])
def test_parse(text, coefficients):
    assert LaurentPolynomial.parse(text).as_dict() == coefficients


@pytest.mark.parametrize('text', ['', 't^', '2*', 'x', '1 + ', 't^-', 't2'])
def test_parse_errors(text):
    with pytest.raises(ComplexError):
        LaurentPolynomial.parse(text)


def test_arithmetic():
    one_t = LaurentPolynomial.parse('1 + t')
    assert one_t * one_t == LaurentPolynomial.parse('1 + 2t + t^2')
    assert one_t - 1 == LaurentPolynomial.monomial(1)
    assert 3 * one_t == LaurentPolynomial({0: 3, 1: 3})
    assert one_t.shift(-2) == LaurentPolynomial.parse('t^-2 + t^-1')
    assert one_t.invert() == LaurentPolynomial.parse('1 + t^-1')
    assert LaurentPolynomial(1) == 1
    assert not LaurentPolynomial()
    with pytest.raises(TypeError):
        one_t + 1.5


def test_queries():
    P = LaurentPolynomial.parse('t^-1 + 3 + 2t^4')
    assert P.coefficient(4) == 2
    assert P.coefficient(2) == 0
    assert P.is_nonnegative()
    assert not LaurentPolynomial({-1: 1, 0: -1}).is_nonnegative()


def test_evaluation():
    P = LaurentPolynomial.parse('t^-1 + 1')
    assert P(1) == 2
    assert isinstance(P(1), int)
    assert P(-1) == 0
    assert P(2) == fractions.Fraction(3, 2)


@given(laurent_polynomials)
def test_text_reads_back(P):
    assert LaurentPolynomial.parse(str(P)) == P


@given(laurent_polynomials, laurent_polynomials)
def test_product_evaluates_multiplicatively(P, Q):
    assert (P * Q)(2) == P(2) * Q(2)
    assert (P + Q)(-1) == P(-1) + Q(-1)
    assert not P - P


def test_betti_small_complex():
    cx = ChainComplex(1, [('x', 1), ('y', 0), ('z', 0)], {'x': ['y', 'z']})
    assert betti(cx) == {0: 1}
    assert poincare(cx) == 1
    assert euler_characteristic(cx) == 1


def test_betti_rejects_non_complexes():
    cx = ChainComplex(1, [('x', 2), ('y', 1), ('z', 0)],
                      {'x': ['y'], 'y': ['z']})
    with pytest.raises(ComplexError):
        betti(cx)


@pytest.mark.parametrize('N', [1, 2, 3])
@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_multicopy_poincare(N, n):
    assert poincare(multicopy_complex(N, n)) == \
        N * LaurentPolynomial({0: 1, n: 1})


def test_trefoil_linearized(trefoil, trefoil_eps):
    cx = linearize(trefoil, trefoil_eps[1])
    assert poincare(cx) == LaurentPolynomial.parse('t + 2')
    assert euler_characteristic(cx) == poincare(cx)(-1)
    assert homology_basis(cx, 1) == [('a1', 'a2')]
    assert homology_basis(cx, 0) == [('b1', ), ('b3', )]
    assert homology_basis(cx, -1) == []
