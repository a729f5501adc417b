import pytest
from hypothesis import given, strategies as st

from munarini import polynomials as pl
from munarini.errors import InputError, UnsupportedParameterError
from munarini.polynomials import BiPoly, IntPoly, RationalSeries, binom, expand_series

from oracles import jacobsthal

X = IntPoly.x()
coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


def pell(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


# -- IntPoly / BiPoly -------------------------------------------------------

def test_intpoly_normalization_and_text():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly().degree == float("-inf")
    assert str(IntPoly([1, 5, 4])) == "1 + 5*x + 4*x^2"
    assert str(IntPoly([0, 4])) == "4*x"
    assert str(IntPoly([1, -2, 0, 1])) == "1 - 2*x + x^3"
    assert str(IntPoly()) == "0"


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_intpoly_ring_homomorphism(a, b, v):
    p, q = IntPoly(a), IntPoly(b)
    assert (p * q)(v) == p(v) * q(v)
    assert (p + q)(v) == p(v) + q(v)
    assert (p - q)(v) == p(v) - q(v)


@given(coeff_lists, st.integers(-4, 4))
def test_shift_inverse_and_derivative(a, s):
    p = IntPoly(a)
    assert p.shift(s).shift(-s) == p
    assert p.shift(s)(0) == p(s)
    expected = sum((IntPoly([0] * (e - 1) + [e * c]) for e, c in enumerate(p.coeffs) if e), IntPoly())
    assert p.derivative() == expected


@given(coeff_lists, coeff_lists)
def test_composition_associates_with_evaluation(a, b):
    p, q = IntPoly(a), IntPoly(b)
    for v in (-2, 0, 1, 3):
        assert p.compose(q)(v) == p(q(v))


def test_bipoly_basics():
    x, q = BiPoly.x(), BiPoly.q()
    d = (x + q) ** 2
    assert d.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (d - d).terms == {}
    assert d.subs_q(0) == IntPoly([0, 0, 1])
    assert d.subs_x(1) == IntPoly([1, 2, 1])


def test_binom_zero_outside_range():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0
    assert binom(5, 2) == 10


# -- series -----------------------------------------------------------------

def test_expand_examples():
    assert pl.series_coefficients(pl.order_gf(2), 5) == [1, 2, 5, 12, 29, 70]
    assert pl.series_coefficients(RationalSeries([1], [1, -1]), 6) == [1] * 7
    for k in range(1, 5):
        assert pl.series_coefficients(pl.fib_gf(k), 10) == [pl.fib_k(n, k) for n in range(11)]


def test_expand_rejects_non_unit_denominator():
    with pytest.raises(InputError):
        RationalSeries([1], [2, 1])
    with pytest.raises(InputError):
        RationalSeries([1], [X, 1])


@given(st.lists(coeff_lists, min_size=1, max_size=4),
       st.sampled_from([1, -1]),
       st.lists(coeff_lists, max_size=3),
       st.integers(0, 8))
def test_expand_solves_linear_equation(num, d0, dtail, order):
    """D * S == N modulo t^(order+1)."""
    series = RationalSeries([IntPoly(c) for c in num], [IntPoly([d0])] + [IntPoly(c) for c in dtail])
    s = expand_series(series, order)
    den = series.denominator
    for n in range(order + 1):
        conv = sum((den[i] * s[n - i] for i in range(min(n, len(den) - 1) + 1)), IntPoly())
        expected = series.numerator[n] if n < len(series.numerator) else IntPoly()
        assert conv == expected


# -- k-Fibonacci --------------------------------------------------------------

def test_fib_k_examples():
    assert [pl.fib_k(n, 1) for n in range(7)] == [0, 1, 1, 2, 3, 5, 8]
    assert pl.fib_k(4, 3) == 33
    assert pl.fib_k(0, 7) == 0
    assert [pl.fib_k(n, 2) for n in range(8)] == [pell(n) for n in range(8)]


# -- weight / cube / maximal polynomials -------------------------------------

def test_weight_examples():
    assert pl.weight_poly(2, 3) == IntPoly([1, 5, 4])
    for k in range(1, 6):
        assert pl.weight_poly(1, k) == IntPoly([1, k - 1])
    for n in range(10):
        assert pl.weight_poly(n, 1) == IntPoly([binom(n - d, d) for d in range(n + 1)])


def test_cube_examples():
    assert pl.cube_poly(2, 3) == IntPoly([10, 13, 4])
    assert pl.cube_poly(2, 2)(1) == 11
    for n in range(10):
        expected = [sum(binom(d, p) * binom(n - d, d) for d in range(p, n + 1)) for p in range(n + 1)]
        assert pl.cube_poly(n, 1) == IntPoly(expected)


def test_distance_cube_examples():
    D = pl.distance_cube_poly(2, 3)
    assert D[(1, 1)] == 8
    assert D[(2, 0)] == 4
    assert D[(0, 0)] == 1
    for n in range(6):
        for k in range(1, 4):
            D = pl.distance_cube_poly(n, k)
            assert D.subs_q(0) == pl.weight_poly(n, k)          # D(x, 0) = W(x)
            assert D.subs_x(0) == pl.weight_poly(n, k)          # p = 0 cubes are vertices


def test_maximal_examples():
    assert pl.maximal_cube_poly(3, 2) == IntPoly([0, 0, 2, 1])
    assert pl.maximal_cube_poly(2, 3) == IntPoly([0, 1, 4])
    for k in range(2, 7):
        assert pl.maximal_cube_poly(1, k) == IntPoly([0, k - 1])
    with pytest.raises(UnsupportedParameterError):
        pl.maximal_cube_poly(3, 1)
    with pytest.raises(UnsupportedParameterError):
        pl.maximal_cube_gf(1)


@pytest.mark.parametrize("n", range(0, 11))
@pytest.mark.parametrize("k", range(1, 6))
def test_three_routes_agree(n, k):
    W = pl.weight_poly_recurrence(n, k)
    assert W == pl.weight_poly_series(n, k) == pl.weight_poly_formula(n, k)
    C = pl.cube_poly(n, k)
    assert C == pl.cube_poly_series(n, k) == pl.cube_poly_formula(n, k) == pl.cube_poly_recurrence(n, k)
    if k >= 2:
        H = pl.maximal_cube_poly_recurrence(n, k)
        assert H == pl.maximal_cube_poly_series(n, k) == pl.maximal_cube_poly_formula(n, k)
        assert all(H[p] == 0 for p in range(n + 1) if 2 * p < n)


def test_cube_number_series():
    assert pl.cube_number_series(1, 6) == [1, 1, 3, 5, 11, 21, 43]
    assert pl.cube_number_series(2, 4) == [1, 3, 11, 39, 139]
    for n in range(12):
        # q(Gamma_n) = q(M_{n+1,1}) = J_{n+2}
        assert pl.cube_number(n + 1, 1) == jacobsthal(n + 2)


def test_total_weight():
    assert pl.total_weight(2, 3) == 13
    for k in range(1, 6):
        assert pl.total_weight(1, k) == k - 1
    assert pl.total_weight(3, 2) == 18
    with pytest.raises(InputError):
        pl.total_weight(0, 2)


def test_size_decomposition_symbolic():
    assert pl.size_identity_residual_symbolic() == BiPoly()
    for k in range(1, 12):
        assert pl.size_identity_residual(k).is_zero()


def test_size_series_matches_recurrence():
    from munarini.graphs import count_edges_recurrence
    for k in range(1, 6):
        assert pl.series_coefficients(pl.size_gf(k), 12) == [count_edges_recurrence(n, k) for n in range(13)]


def test_max_degree_witness():
    rep = pl.max_degree_witness(2, 3)
    assert rep["weight_linear_coeff"] == 5 and rep["zero_vertex_degree"] == 5
    assert rep["genpell_max_degree"] == 4 and rep["contradiction"]
    for k in range(1, 5):
        rep = pl.max_degree_witness(1, k)
        assert rep["weight_linear_coeff"] == rep["zero_vertex_degree"] == k - 1
    rep = pl.max_degree_witness(3, 2)
    assert rep["weight_linear_coeff"] == 5 == rep["genpell_max_degree"]
    assert not rep["contradiction"]
