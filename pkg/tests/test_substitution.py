from fractions import Fraction

import pytest
from hypothesis import given

from conftest import betas, polys
from lspecial.errors import BetaOutOfRange, MixedBackend, SpaceMismatch
from lspecial.poly import BivarPoly, Space, UnivarPoly, homogeneous_part
from lspecial.reproduce import ellipse_pair
from lspecial.scalars import Scalar
from lspecial.substitution import BetaParam, pair_to_curve, sbeta_forward, sbeta_inverse

R = Scalar.rational
HALF = Fraction(1, 2)


def test_forward_on_variables(xy, zw):
    x, y = xy
    z, w = zw
    assert sbeta_forward(x, HALF) == 2 * z - w
    assert sbeta_forward(y, HALF) == (z - w) * R(0, 1)


def test_forward_quadratic(xy, zw):
    x, y = xy
    z, w = zw
    # x^2/2 + y^2 has no cross term in z, z_beta at beta = 1/2
    assert sbeta_forward(x * x * HALF + y * y, HALF) == z * z - w * w * HALF


def test_inverse_on_variables(xy, zw):
    x, y = xy
    z, w = zw
    assert sbeta_inverse(z, HALF) == x + y * R(0, 1)
    assert sbeta_inverse(w, Fraction(1, 4)) == x + y * R(0, 4)


def test_pair_to_curve_examples(xy):
    x, y = xy
    beta = Fraction(1, 3)
    f1, f2 = ellipse_pair(beta)
    assert pair_to_curve(f1, f2, beta) == x * x + y * y * 3 - 1
    # z - z_beta = i(1 - 1/beta) y
    assert pair_to_curve(UnivarPoly([0, 1]), UnivarPoly([0, 1]), beta) == y * R(0, -2)
    with pytest.raises(ValueError):
        pair_to_curve(UnivarPoly([]), UnivarPoly([0]), beta)


@given(polys(5), betas)
def test_round_trip(p, beta):
    q = sbeta_forward(p, beta)
    assert q.space is Space.ZW
    assert sbeta_inverse(q, beta) == p


@given(polys(4, space=Space.ZW), betas)
def test_inverse_round_trip(q, beta):
    assert sbeta_forward(sbeta_inverse(q, beta), beta) == q


@given(polys(3), polys(3), betas)
def test_multiplicative_and_additive(p, q, beta):
    assert sbeta_forward(p * q, beta) == sbeta_forward(p, beta) * sbeta_forward(q, beta)
    assert sbeta_forward(p + q, beta) == sbeta_forward(p, beta) + sbeta_forward(q, beta)


@given(polys(5), betas)
def test_degree_and_homogeneous_parts(p, beta):
    q = sbeta_forward(p, beta)
    assert q.degree == p.degree
    for m in range(6):
        assert sbeta_forward(homogeneous_part(p, m), beta) == homogeneous_part(q, m)


@given(betas)
def test_ellipse_identity(beta):
    x, y = BivarPoly.var(0), BivarPoly.var(1)
    f1, f2 = ellipse_pair(beta)
    assert pair_to_curve(f1, f2, beta) == x * x + y * y * (1 / beta) - 1


def test_approx_backend_agrees(xy):
    x, y = xy
    p = x ** 3 - x * y * 2 + 1
    exact = sbeta_forward(p, Fraction(1, 5))
    approx = sbeta_forward(p.to_approx(), 0.2)
    assert max(abs(a - b) for a, b in zip(
        [exact.coeff(*m).to_approx() for m in exact.sorted_monomials()],
        [approx.coeff(*m) for m in exact.sorted_monomials()])) < 1e-13


def test_errors(xy, zw):
    x, _ = xy
    z, _ = zw
    with pytest.raises(SpaceMismatch):
        sbeta_forward(z, HALF)
    with pytest.raises(SpaceMismatch):
        sbeta_inverse(x, HALF)
    for bad in (0, 1, Fraction(3, 2), -0.5):
        with pytest.raises(BetaOutOfRange):
            BetaParam(bad)
    with pytest.raises(BetaOutOfRange):
        BetaParam(R(HALF, 1))
    with pytest.raises(MixedBackend):
        sbeta_forward(x, 0.5)
    assert BetaParam("1/3").is_exact and not BetaParam("0.25").is_exact
