from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from arithgenus import GREVLEX, LEX, Ideal, MonomialIdeal, buchberger, leading_ideal
from arithgenus.hilbert import (
    HilbertPolynomial,
    dimension_and_degree,
    hilbert_function,
    hilbert_numerator,
    hilbert_polynomial,
)

from conftest import small_ideals
from oracles import interpolate, pascal, quotient_dimension, series_coefficients
from strategies import homogeneous_ideal_gens


def mono_ideal(nvars, *gens):
    return MonomialIdeal.from_monomials(gens, nvars)


def test_numerator_of_hyperplane():
    h = hilbert_numerator(mono_ideal(2, (1, 0)))
    assert h.raw == (1, -1)
    assert h.cancelled == (1,) and h.poles == 1


def test_numerator_of_zero_ideal():
    h = hilbert_numerator(mono_ideal(3))
    assert h.raw == (1,) and h.poles == 3
    P = hilbert_polynomial(h)
    assert P.coefficients == (Fraction(1), Fraction(3, 2), Fraction(1, 2))
    assert P(4) == pascal(6, 2)


def test_numerator_of_unit_ideal():
    h = hilbert_numerator(mono_ideal(3, (0, 0, 0)))
    assert h.is_zero()
    assert hilbert_polynomial(h).is_zero()


def test_artinian_quotient():
    # k[x, y]/(x^2, y^3): Hilbert function 1, 2, 2, 1, 0, ...
    h = hilbert_numerator(mono_ideal(2, (2, 0), (0, 3)))
    assert h.poles == 0
    assert h.series(5) == [1, 2, 2, 1, 0, 0]
    P = hilbert_polynomial(h)
    assert P.is_zero() and P.t0 == 4


def test_twisted_cubic_leading_ideal():
    M = mono_ideal(4, (0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0))
    P = hilbert_polynomial(hilbert_numerator(M))
    assert P.coefficients == (1, 3) and P.t0 == 0
    assert str(P) == "3*t + 1"
    assert dimension_and_degree(P) == (1, 3)
    assert [hilbert_function(M, 4, t) for t in range(6)] == [1, 4, 7, 10, 13, 16]


def test_threshold_larger_than_zero():
    # (x0*x1, x0*x2, x1*x2): the three coordinate points of P^2
    M = mono_ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))
    P = hilbert_polynomial(hilbert_numerator(M))
    assert P.coefficients == (3,)
    assert P.t0 == 1  # h(0) = 1, h(t) = 3 for t >= 1
    assert hilbert_function(M, 3, 0) == 1


def test_hilbert_polynomial_string_forms():
    assert str(HilbertPolynomial.from_values([-2, 2, 4])) == "4*t^2 + 2*t - 2"
    assert str(HilbertPolynomial.from_values([0, -1])) == "-t"
    assert str(HilbertPolynomial.from_values([])) == "0"


def test_dimension_and_degree_rejects_zero():
    with pytest.raises(ValueError):
        dimension_and_degree(HilbertPolynomial.from_values([]))


@st.composite
def monomial_ideals(draw, nvars=4):
    gens = draw(
        st.lists(
            st.lists(st.integers(0, 3), min_size=nvars, max_size=nvars).map(tuple).filter(any),
            min_size=0,
            max_size=5,
        )
    )
    return MonomialIdeal.from_monomials(gens, nvars)


@settings(max_examples=100, deadline=None)
@given(monomial_ideals())
def test_numerator_matches_brute_force_series(M):
    h = hilbert_numerator(M)
    brute = [hilbert_function(M, 4, t) for t in range(10)]
    assert series_coefficients(list(h.raw), 4, 9) == brute
    assert h.series(9) == brute


@settings(max_examples=100, deadline=None)
@given(monomial_ideals())
def test_polynomial_agrees_from_threshold(M):
    P = hilbert_polynomial(hilbert_numerator(M))
    for t in range(P.t0, P.t0 + 8):
        assert P(t) == hilbert_function(M, 4, t)
    if P.t0 > 0:
        assert P(P.t0 - 1) != hilbert_function(M, 4, P.t0 - 1)


@settings(max_examples=100, deadline=None)
@given(monomial_ideals())
def test_polynomial_matches_interpolation_and_is_integer_valued(M):
    P = hilbert_polynomial(hilbert_numerator(M))
    if P.is_zero():
        return
    pts = [(t, hilbert_function(M, 4, t)) for t in range(P.t0, P.t0 + P.r + 1)]
    assert tuple(interpolate(pts)) == P.coefficients
    for t in range(-6, 12):
        assert P(t).denominator == 1


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(homogeneous_ideal_gens(nvars=3, max_gens=3, max_degree=3))
def test_standard_monomials_count_quotient_dimension(gens):
    # Macaulay's theorem, checked against linear algebra
    M = leading_ideal(Ideal(gens, 3), GREVLEX)
    for t in range(6):
        assert hilbert_function(M, 3, t) == quotient_dimension(gens, 3, t)


@pytest.mark.parametrize("name", sorted(small_ideals()))
def test_bridge_linear_algebra(name):
    I = small_ideals()[name]
    M = leading_ideal(I, GREVLEX)
    for t in range(6):
        assert hilbert_function(M, I.nvars, t) == quotient_dimension(I.generators, I.nvars, t), t


@pytest.mark.parametrize("name", sorted(small_ideals()))
def test_hilbert_polynomial_order_independent(name):
    I = small_ideals()[name]
    Pg = hilbert_polynomial(hilbert_numerator(leading_ideal(I, GREVLEX)))
    Pl = hilbert_polynomial(hilbert_numerator(leading_ideal(I, LEX)))
    assert Pg.coefficients == Pl.coefficients


def test_numerator_rejects_wrong_nvars():
    with pytest.raises(ValueError):
        hilbert_numerator(mono_ideal(3, (1, 0, 0)), nvars=4)


def test_hilbert_function_negative_degree():
    with pytest.raises(ValueError):
        hilbert_function(mono_ideal(2), 2, -1)


def test_buchberger_leading_terms_give_same_series():
    from arithgenus import Polynomial

    x, y, z = Polynomial.variables(3)
    gens = [x**2 - y * z, x * y - z**2]
    M = MonomialIdeal.from_monomials([g.leading_monomial() for g in buchberger(gens)], 3)
    h = hilbert_numerator(M)
    # complete intersection of two quadrics in P^2: four points
    assert h.multiplicity == 4 and h.poles == 1
