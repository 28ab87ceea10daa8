import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithgenus import LEX, Ideal, Polynomial
from arithgenus.errors import NonHomogeneousError, PreconditionError, ZeroQuotientError
from arithgenus.invariants import (
    VarietyReport,
    analyze,
    euler_characteristic,
    genus_from_euler,
    hypersurface_genus,
    paper_binomial,
    product_genus,
    random_form,
    theorem_prod_genus,
)

from conftest import ideal
from oracles import pascal


# -- closed forms -----------------------------------------------------------


def test_binomial_examples():
    assert paper_binomial(4, 4) == 1
    assert paper_binomial(2, 4) == 0
    assert paper_binomial(6, 4) == pascal(6, 4) == 15
    assert paper_binomial(-1, 2) == 0
    with pytest.raises(ValueError):
        paper_binomial(3, -1)


@given(st.integers(-5, 30), st.integers(0, 12))
def test_binomial_matches_pascal(a, b):
    assert paper_binomial(a, b) == pascal(a, b)


def test_hypersurface_genus_examples():
    assert hypersurface_genus(3, 2) == 1
    assert hypersurface_genus(5, 4) == 1
    assert hypersurface_genus(6, 4) == 5
    for N in range(1, 8):
        assert hypersurface_genus(1, N) == 0
    with pytest.raises(PreconditionError):
        hypersurface_genus(0, 2)
    with pytest.raises(PreconditionError):
        hypersurface_genus(2, 0)


@given(st.integers(1, 40), st.integers(1, 12))
def test_hypersurface_genus_non_negative(d, N):
    assert hypersurface_genus(d, N) >= 0


def test_product_genus_examples():
    # rational curve times a hypersurface of dimension n-1: the sign flips
    for n, p in [(4, 1), (4, 5), (5, 7)]:
        assert product_genus(0, 1, p, n - 1) == -p
    assert product_genus(0, 3, 0, 2) == 0


@given(st.integers(-50, 50), st.integers(0, 8), st.integers(-50, 50), st.integers(0, 8))
def test_product_genus_symmetric(a, r, b, s):
    assert product_genus(a, r, b, s) == product_genus(b, s, a, r)


def test_hd_times_hl_examples():
    assert theorem_prod_genus(1, 1, 3, 2) == -1
    assert theorem_prod_genus(1, 2, 5, 4) == -1
    assert theorem_prod_genus(2, 3, 7, 4) == -15
    assert theorem_prod_genus(1, 1, 2, 2) == 0


def test_hd_times_hl_hypothesis():
    with pytest.raises(PreconditionError):
        theorem_prod_genus(2, 1, 3, 2)  # d - 1 = n
    # the weaker bound d - 1 < 2n is accepted only on request
    assert theorem_prod_genus(2, 1, 3, 2, relaxed=True) == -1
    with pytest.raises(PreconditionError):
        theorem_prod_genus(3, 1, 3, 2, relaxed=True)


@given(st.integers(1, 6), st.integers(1, 8), st.integers(1, 12), st.integers(1, 8))
def test_hd_times_hl_negative_iff(d, n, l, m):
    if d - 1 >= n:
        return
    value = theorem_prod_genus(d, n, l, m)
    assert value == -pascal(l - 1, m)
    assert (value < 0) == (l - 1 >= m)


def test_euler_examples():
    assert euler_characteristic(0, 3) == 1
    assert euler_characteristic(1, 1) == 0
    assert euler_characteristic(-1, 4) == 0


@given(st.integers(-100, 100), st.integers(0, 10))
def test_euler_round_trip(p, r):
    chi = euler_characteristic(p, r)
    assert genus_from_euler(chi, r) == p
    assert (-1) ** r * (chi - 1) == p


def test_random_form_deterministic():
    f = random_form(3, 3, 5)
    assert f == random_form(3, 3, 5)
    assert f != random_form(3, 3, 6)
    assert len(f) == pascal(5, 2)
    assert all(c.denominator == 1 and 1 <= abs(c) <= 9 for c in f.terms.values())
    assert f.is_homogeneous() == (True, 3)


# -- the pipeline -----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space(n):
    rep = analyze(Ideal([], n + 1))
    assert (rep.r, rep.degree, rep.p_a, rep.chi) == (n, 1, 0, 1)
    assert rep.hilbert(0) == 1


def test_twisted_cubic(twisted_cubic):
    rep = analyze(twisted_cubic)
    assert (rep.r, rep.degree, rep.p_a, rep.chi) == (1, 3, 0, 1)
    assert str(rep.hilbert) == "3*t + 1"


def test_plane_cubic():
    rep = analyze(ideal(3, "x0^3 + x1^3 + x2^3"))
    assert str(rep.hilbert) == "3*t"
    assert (rep.r, rep.degree, rep.p_a, rep.chi, rep.t0) == (1, 3, 1, 0, 1)


def test_quartic_surface_matches_closed_form():
    rep = analyze(Ideal([random_form(4, 4, 3)], 4))
    assert rep.p_a == hypersurface_genus(4, 3) == 1
    assert (rep.r, rep.degree) == (2, 4)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("N", [2, 3, 4])
def test_hypersurface_pipeline_agrees(d, N):
    rep = analyze(Ideal([random_form(d, N + 1, 100 * d + N)], N + 1))
    assert rep.p_a == hypersurface_genus(d, N)
    assert rep.r == N - 1 and rep.degree == d


def test_segre_quadric_dimension_degree():
    rep = analyze(ideal(4, "x0*x3 - x1*x2"))
    # P(t) = (t + 1)^2
    assert rep.hilbert.coefficients == (1, 2, 1)
    assert (rep.r, rep.degree, rep.p_a) == (2, 2, 0)


def test_non_reduced_scheme():
    # double line in P^2: P(t) = 2t + 1
    rep = analyze(ideal(3, "x0^2"))
    assert (rep.r, rep.degree, rep.p_a) == (1, 2, 0)


def test_lex_order_gives_same_report(twisted_cubic):
    a = analyze(twisted_cubic)
    b = analyze(twisted_cubic, order=LEX)
    assert (a.hilbert.coefficients, a.p_a, a.chi) == (b.hilbert.coefficients, b.p_a, b.chi)
    assert b.order == "lex"


def test_analyze_errors():
    x = Polynomial.variables(3)
    with pytest.raises(NonHomogeneousError):
        analyze(Ideal([x[0] + 1], 3))
    with pytest.raises(ZeroQuotientError):
        analyze(Ideal([x[0], x[1], x[2]], 3))  # irrelevant ideal: empty scheme
    with pytest.raises(ZeroQuotientError):
        analyze(Ideal([Polynomial.constant(1, 3)], 3))


def test_report_round_trip(twisted_cubic):
    rep = analyze(twisted_cubic, seed=4)
    assert VarietyReport.from_dict(rep.to_dict()) == rep


def test_report_identities_enforced():
    rep = analyze(ideal(3, "x0^3 + x1^3 + x2^3"))
    d = rep.to_dict()
    d["p_a"] = "5"
    with pytest.raises(ValueError):
        VarietyReport.from_dict(d)
