from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given

from conftest import gaussian, polys, real_exact
from lspecial.errors import BackendError, DivisionByZeroPoly, MixedBackend, NotDivisible, SpaceMismatch
from lspecial.gcd import bp_gcd_real
from lspecial.poly import (
    NEG_INF,
    BivarPoly,
    Space,
    UnivarPoly,
    bp_arith,
    bp_divide_exact,
    embed_univar,
    evaluate,
    homogeneous_part,
    poly_from_json,
    poly_to_json,
    re_im_split,
    univar_from_json,
    univar_to_json,
)
from lspecial.scalars import Scalar

R = Scalar.rational


def quartic_pol(beta, alpha):
    return BivarPoly({(4, 0): 1, (2, 2): 2 / beta - 4 * alpha ** 2, (0, 4): 1 / beta ** 2})


def test_arith_examples(xy):
    x, y = xy
    assert bp_arith(x + y, x - y, "mul") == x * x - y * y
    p = x * x + y * y
    assert p + BivarPoly.zero() == p
    assert p * 1 == p


def test_degree_and_zero_sentinel(xy):
    x, y = xy
    assert BivarPoly.zero().degree == NEG_INF
    assert (x * y * y + 1).degree == 3
    assert BivarPoly({(1, 1): 0}).is_zero()


def test_space_and_backend_are_enforced(xy, zw):
    x, _ = xy
    z, _ = zw
    with pytest.raises(SpaceMismatch):
        x + z
    with pytest.raises(MixedBackend):
        x + x.to_approx()


def test_divide_examples(xy, zw):
    x, y = xy
    assert bp_divide_exact(x * x - y * y, x - y) == x + y
    with pytest.raises(NotDivisible):
        bp_divide_exact(x ** 4 + y ** 4, x - y)
    with pytest.raises(DivisionByZeroPoly):
        bp_divide_exact(x, BivarPoly.zero())
    z, w = zw
    q = bp_divide_exact(z ** 5 - w ** 5, z - w)
    assert q == z ** 4 + z ** 3 * w + z * z * w * w + z * w ** 3 + w ** 4


def test_divide_approx_tolerance(xy):
    x, y = xy
    a = (x * x - y * y).to_approx() + 1e-13
    assert bp_divide_exact(a, (x - y).to_approx()) == (x + y).to_approx()
    with pytest.raises(NotDivisible):
        bp_divide_exact((x * x - y * y).to_approx() + 1e-3, (x - y).to_approx())


@given(polys(3), polys(3))
def test_divide_recovers_factor(a, b):
    assume(not b.is_zero())
    assert bp_divide_exact(a * b, b) == a


@given(polys(3), polys(3))
def test_product_degree(a, b):
    assume(not a.is_zero() and not b.is_zero())
    assert (a * b).degree == a.degree + b.degree


def test_gcd_examples(xy):
    x, y = xy
    assert bp_gcd_real(x * x - y * y, x * x - 2 * x * y + y * y) == x - y
    assert bp_gcd_real(x * x + y * y - 1, x + 3) == BivarPoly.constant(1)
    p = x * x * 3 + x * y - 2
    assert bp_gcd_real(p, p * 5) == p
    assert bp_gcd_real(p * Fraction(1, 2), BivarPoly.zero()) == p


def test_gcd_rejects_complex_or_approx(xy):
    x, y = xy
    with pytest.raises(BackendError):
        bp_gcd_real(x * R(0, 1), y)
    with pytest.raises(BackendError):
        bp_gcd_real(x.to_approx(), y.to_approx())


def _to_sympy(p):
    X, Y = sympy.symbols("x y")
    return sum((sympy.Rational(c.re.numerator, c.re.denominator) * X ** i * Y ** j for (i, j), c in p.items()), sympy.Integer(0)), X, Y


def _sympy_primitive_gcd(a, b):
    sa, X, Y = _to_sympy(a)
    sb, _, _ = _to_sympy(b)
    g = sympy.Poly(sympy.gcd(sa, sb), X, Y)
    terms = {m: Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for m, c in g.terms()}
    return BivarPoly(terms).primitive()


real_polys = polys(3, coeffs=real_exact, max_terms=5)


@given(real_polys, real_polys, real_polys)
def test_gcd_matches_independent_oracle(a, b, g):
    assume(not g.is_zero() and not (a.is_zero() and b.is_zero()))
    lhs = bp_gcd_real(a * g, b * g)
    assert lhs == _sympy_primitive_gcd(a * g, b * g)
    # g divides the gcd, and the gcd divides both inputs
    bp_divide_exact(lhs, g)
    bp_divide_exact(a * g, lhs)
    bp_divide_exact(b * g, lhs)


def test_homogeneous_part_examples(xy):
    x, y = xy
    p = x * x + x * y + x + 1
    assert homogeneous_part(p, 2) == x * x + x * y
    assert homogeneous_part(p, 7).is_zero()
    P = quartic_pol(Fraction(1, 25), Fraction(3))
    assert homogeneous_part(P, 4) == P


@given(polys(5))
def test_homogeneous_decomposition(p):
    total = BivarPoly.zero()
    for m in range(6):
        total = total + homogeneous_part(p, m)
    assert total == p


def test_re_im_split_examples(xy):
    x, y = xy
    c = x * x + y * y - 1
    assert re_im_split(c * R(1, 1)) == (c, c)
    assert re_im_split(x * x - y * y) == (x * x - y * y, BivarPoly.zero())
    assert re_im_split(x * y * R(0, 1)) == (BivarPoly.zero(), x * y)


@given(polys(4))
def test_re_im_recombine(p):
    a, b = re_im_split(p)
    assert a + b * R(0, 1) == p
    assert a.is_real() and b.is_real()


def test_evaluate_examples(xy):
    x, y = xy
    assert evaluate(x * x + y * y, R(3), R(4)) == R(25)
    assert evaluate(quartic_pol(Fraction(1, 25), Fraction(3)), R(0), R(0)) == R(0)
    t = R(Fraction(7, 3), 2)
    assert evaluate(x - y, t, t) == R(0)
    with pytest.raises(MixedBackend):
        evaluate(x, Scalar.approx(1.0), Scalar.approx(1.0))


@given(polys(4), gaussian, gaussian)
def test_evaluate_matches_term_sum(p, u, v):
    naive = sum((c * u ** i * v ** j for (i, j), c in p.items()), R(0))
    assert evaluate(p, u, v) == naive


def test_embed_univar():
    assert embed_univar(UnivarPoly([0, 0, 1]), "first_var").terms == {(2, 0): R(1)}
    assert embed_univar(UnivarPoly([7])).terms == {(0, 0): R(7)}
    C = R(2, -1)
    f = embed_univar(UnivarPoly([0, -1, 0, 0, 0, C]), "first_var")
    assert f.terms == {(5, 0): C, (1, 0): R(-1)} and f.space is Space.ZW
    assert embed_univar(UnivarPoly([0, 3]), "second_var").terms == {(0, 1): R(3)}


def test_primitive_normalization(xy):
    x, y = xy
    p = (x * x + y * y * Fraction(1, 2) - 1) * -3
    assert p.primitive() == 2 * x * x + y * y - 2


def test_json_canonical_and_round_trip(xy):
    x, y = xy
    p = y * y * R(Fraction(1, 3), -1) + x * x * x - 2
    data = poly_to_json(p)
    assert [t["e"] for t in data["terms"]] == [[3, 0], [0, 2], [0, 0]]
    assert data["terms"][1]["c"] == ["1/3", "-1/1"]
    assert poly_from_json(data) == p
    q = p.to_approx()
    assert poly_from_json(poly_to_json(q)) == q
    f = UnivarPoly([R(1), R(0, 2)])
    assert univar_from_json(univar_to_json(f)) == f
    assert univar_from_json([["1/1", "0/1"], ["0/1", "2/1"]]) == f
