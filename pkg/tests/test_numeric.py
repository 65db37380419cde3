from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from bicirc_forest.ball import CertifiedComplex, CertifiedReal, make_context
from bicirc_forest.errors import (
    OddOrderForHalfClass,
    PrecisionExhausted,
    RootOnUnitCircle,
    ZeroPolynomial,
)
from bicirc_forest.graph import BicirculantSpec
from bicirc_forest.laurent import IntLaurentPoly, build_P, cyclotomic_product, forest_count_formula
from bicirc_forest.numeric import (
    asymptotic_constant,
    cheb_T,
    chebyshev_cyclotomic_product,
    class_polynomial,
    convergence_report,
    find_roots,
    forest_count_chebyshev,
    mahler_integral,
    mahler_roots,
    report_record,
    sample_on_circle,
)

from conftest import specs
from test_laurent import palindromics

CTX = make_context(200)


def ball(x, rad=0):
    return CertifiedReal(CTX.mpf(x), rad)


@given(st.fractions(-100, 100, max_denominator=50), st.fractions(-100, 100, max_denominator=50))
def test_ball_arithmetic_contains_exact(a, b):
    x, y = CertifiedReal.from_value(CTX, a), CertifiedReal.from_value(CTX, b)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if b:
        assert (x / y).contains(a / b)
    assert (x**3).contains(a**3)


def test_ball_functions_and_bounds():
    two = ball(2, CTX.mpf("1e-40"))
    assert two.sqrt().contains(CTX.sqrt(2))
    assert two.log().exp().overlaps(two)
    assert abs(ball(-3)).contains(3)
    wide = ball(0, 1)
    assert abs(wide).lower() <= 0 <= abs(wide).upper()
    with pytest.raises(ZeroDivisionError):
        wide.inverse()
    with pytest.raises(ValueError):
        wide.log()
    assert ball(7, CTX.mpf("0.1")).unique_integer() == 7
    assert ball(7.5, CTX.mpf("0.1")).unique_integer() is None
    assert ball(7, 1).unique_integer() is None
    record = ball(1.5, CTX.mpf("1e-30")).to_json()
    assert record["mid"].startswith("1.5")


def test_precision_is_local():
    before = mpmath.mp.prec
    ctx = make_context(1000)
    CertifiedReal(ctx.mpf(1)) / 3
    assert mpmath.mp.prec == before


@given(st.integers(0, 6), st.integers(1, 6), st.fractions(-2, 5, max_denominator=16))
def test_cheb_composition(n, m, w):
    z = CertifiedComplex.from_value(CTX, w)
    lhs = cheb_T(m, cheb_T(n, z))
    rhs = cheb_T(m * n, z)
    assert lhs.overlaps(rhs)


@given(st.integers(0, 40), st.floats(-1, 1))
def test_cheb_cosine(n, x):
    w = CertifiedComplex(CTX.mpc(x))
    assert abs(cheb_T(n, w).mid - CTX.cos(n * CTX.acos(x))) < 1e-50


def test_find_roots_multiplicity_and_containment():
    # (z - 2)^2 (z^2 + 1) (3z - 1)
    coeffs = [int(c) for c in np.polymul(np.polymul([1, -4, 4], [1, 0, 1]), [3, -1])[::-1]]
    roots = find_roots(coeffs, 128)
    assert roots.degree == 5
    found = {(round(float(r.mid.real), 6), round(float(r.mid.imag), 6)): m for r, m in roots}
    assert found == {(2.0, 0.0): 2, (0.0, 1.0): 1, (0.0, -1.0): 1, (0.333333, 0.0): 1}
    for r, _ in roots:
        assert r.rad < 1e-30
    assert any(r.contains(Fraction(1, 3)) for r, _ in roots)
    with pytest.raises(ZeroPolynomial):
        find_roots([0, 0])


def test_find_roots_close_cluster():
    # Mignotte-like: z^8 - 2(100 z - 1)^2 has two roots very near 1/100
    coeffs = [0] * 9
    coeffs[8] = 1
    coeffs[0], coeffs[1], coeffs[2] = -2, 400, -20000
    roots = find_roots(coeffs, 128)
    assert roots.degree == 8
    for i, (a, _) in enumerate(roots):
        for b, _ in list(roots)[i + 1:]:
            assert not a.overlaps(b)


@given(palindromics.filter(lambda p: p.degree >= 1), st.integers(1, 6))
def test_chebyshev_product_contains_exact(p, n):
    try:
        approx = chebyshev_cyclotomic_product(p, n, 256)
    except PrecisionExhausted:
        approx = chebyshev_cyclotomic_product(p, n, 1024)
    assert approx.contains(cyclotomic_product(p, n))


@given(specs(max_n=10))
def test_chebyshev_route_matches_formula(spec):
    assert forest_count_chebyshev(spec) == forest_count_formula(spec)


def test_chebyshev_route_precision_report():
    fam6 = BicirculantSpec(4, (1,), (1,), (0,), True, True)
    value, prec = forest_count_chebyshev(fam6, n=100, return_precision=True)
    assert value == forest_count_formula(fam6, 100)
    assert 128 < prec <= 16384
    with pytest.raises(OddOrderForHalfClass):
        forest_count_chebyshev(fam6, n=7)


def test_mahler_known_values():
    p = IntLaurentPoly.constant(7) - IntLaurentPoly.symmetric(1, 2)
    hi = make_context(400)
    a = (7 + hi.sqrt(33)) / 2
    assert mahler_roots(p, 256).contains(a)
    assert abs(mahler_integral(p).mid - a) < 1e-12
    golden = IntLaurentPoly(0, (1, -3, 1))
    assert mahler_roots(golden, 256).contains((3 + hi.sqrt(5)) / 2)
    assert mahler_roots(IntLaurentPoly.constant(-5)).mid == 5


def test_mahler_failures():
    cyclo = IntLaurentPoly(0, (1, 1, 1))
    with pytest.raises(RootOnUnitCircle):
        mahler_roots(cyclo, max_precision=512)
    lehmer = IntLaurentPoly(0, (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
    with pytest.raises(RootOnUnitCircle):
        mahler_roots(lehmer, max_precision=512)
    with pytest.raises(RootOnUnitCircle):
        mahler_integral(IntLaurentPoly(0, (-1, 1)))
    with pytest.raises(ZeroPolynomial):
        mahler_roots(IntLaurentPoly())


@given(specs(max_n=10).filter(lambda s: s.s > 0))
def test_mahler_routes_agree(spec):
    poly = class_polynomial(spec)
    assert abs(mahler_roots(poly).mid - mahler_integral(poly, 1e-12).mid) < 1e-9


def test_convergence_report_family_one():
    spec = BicirculantSpec(3, (1,), (), (0,))
    rows = convergence_report(spec, [5, 10, 20])
    errors = [abs(r.ratio.mid - 1) for r in rows]
    assert errors[0] > errors[1] > errors[2]
    assert rows[2].count == forest_count_formula(spec, 20)
    assert report_record(rows[0])["count"] == str(rows[0].count)
    assert convergence_report(spec, []) == []
    half = BicirculantSpec(4, (1,), (), (0,), True)
    with pytest.raises(OddOrderForHalfClass):
        convergence_report(half, [3])


def test_empty_graph_constant_is_one():
    spec = BicirculantSpec(5)
    assert asymptotic_constant(spec).mid == 1
    assert all(r.ratio.mid == 1 for r in convergence_report(spec, [1, 4, 9]))


@given(specs())
def test_circle_samples_bounded_below(spec):
    vals = sample_on_circle(build_P(spec).P1, 256)
    assert np.all(np.abs(vals.imag) < 1e-9)
    assert vals.real.min() >= 2 * spec.s + 1 - 1e-9
