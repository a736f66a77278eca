"""Change of variables between the (x, y) plane and the (z, z_beta) plane.

With ``z = x + i*y`` and ``z_beta = x + (i/beta)*y`` the forward operator
``sbeta_forward`` rewrites a polynomial in ``x, y`` as a polynomial in
``z, z_beta`` via

    x = (z - beta*z_beta) / (1 - beta),   y = i*beta*(z - z_beta) / (1 - beta),

and ``sbeta_inverse`` substitutes ``z, z_beta`` back.  Both maps are linear
in the coefficients, preserve total degree and send homogeneous parts to
homogeneous parts, so they are computed one monomial at a time from cached
images of ``x^i y^j`` (resp. ``z^i z_beta^j``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import BetaOutOfRange, MixedBackend, SpaceMismatch
from .poly import BivarPoly, Space, UnivarPoly, embed_univar
from .scalars import Scalar, parse_scalar

__all__ = ["BetaParam", "sbeta_forward", "sbeta_inverse", "pair_to_curve"]


class BetaParam:
    """The real parameter beta of L_beta, restricted to the open interval (0, 1)."""

    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, BetaParam):
            value = value.value
        elif isinstance(value, str):
            value = parse_scalar(value)
        elif isinstance(value, float):
            value = Scalar.approx(value)
        elif not isinstance(value, Scalar):
            value = Scalar.rational(Fraction(value))
        if not value.is_real():
            raise BetaOutOfRange(f"beta must be real, got {value}")
        if not (0 < value.re < 1):
            raise BetaOutOfRange(f"beta must lie in (0, 1), got {value.re}")
        self._value = value

    @property
    def value(self) -> Scalar:
        return self._value

    @property
    def is_exact(self) -> bool:
        return self._value.is_exact

    def __float__(self):
        return float(self._value.re)

    def to_approx(self) -> BetaParam:
        return BetaParam(self._value.to_approx())

    def __eq__(self, other):
        return isinstance(other, BetaParam) and self._value == other._value

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return f"BetaParam({self._value.re})"


def _as_beta(beta) -> BetaParam:
    return beta if isinstance(beta, BetaParam) else BetaParam(beta)


@lru_cache(maxsize=4096)
def _linear_power(a: Scalar, b: Scalar, n: int) -> tuple[Scalar, ...]:
    # (a*u + b*v)^n; entry k is the coefficient of u^k v^(n-k)
    return tuple(comb(n, k) * a ** k * b ** (n - k) for k in range(n + 1))


@lru_cache(maxsize=65536)
def _monomial_image(first: tuple[Scalar, Scalar], second: tuple[Scalar, Scalar],
                    i: int, j: int) -> tuple[Scalar, ...]:
    # image of u^i v^j under u -> first[0]*s + first[1]*t, v -> second[0]*s + second[1]*t;
    # entry k is the coefficient of s^k t^(i+j-k)
    pa = _linear_power(first[0], first[1], i)
    pb = _linear_power(second[0], second[1], j)
    out = [Scalar.zero(first[0].is_exact)] * (i + j + 1)
    for ka, ca in enumerate(pa):
        if ca.is_zero():
            continue
        for kb, cb in enumerate(pb):
            out[ka + kb] = out[ka + kb] + ca * cb
    return tuple(out)


def _substitute(p: BivarPoly, first, second, target: Space) -> BivarPoly:
    out: dict[tuple[int, int], Scalar] = {}
    for (i, j), c in p.items():
        n = i + j
        for k, m in enumerate(_monomial_image(first, second, i, j)):
            if m.is_zero():
                continue
            key = (k, n - k)
            v = c * m
            out[key] = out[key] + v if key in out else v
    return BivarPoly(out, target, p.is_exact)


def _check_backend(p: BivarPoly, beta: BetaParam):
    if p.is_exact != beta.is_exact:
        raise MixedBackend("polynomial and beta use different backends; promote one explicitly")


def _forward_images(beta: BetaParam):
    b = beta.value
    one = Scalar.one(b.is_exact)
    i = Scalar(0, 1, exact=b.is_exact)
    s = one / (one - b)
    return (s, -b * s), (i * b * s, -(i * b * s))


def _inverse_images(beta: BetaParam):
    b = beta.value
    one = Scalar.one(b.is_exact)
    i = Scalar(0, 1, exact=b.is_exact)
    return (one, i), (one, i / b)


def sbeta_forward(p: BivarPoly, beta) -> BivarPoly:
    """S_beta: rewrite an xy polynomial in the variables (z, z_beta)."""
    beta = _as_beta(beta)
    if p.space is not Space.XY:
        raise SpaceMismatch("sbeta_forward expects an xy polynomial")
    _check_backend(p, beta)
    x_img, y_img = _forward_images(beta)
    return _substitute(p, x_img, y_img, Space.ZW)


def sbeta_inverse(q: BivarPoly, beta) -> BivarPoly:
    """Inverse of :func:`sbeta_forward`: substitute z = x + iy, z_beta = x + (i/beta) y."""
    beta = _as_beta(beta)
    if q.space is not Space.ZW:
        raise SpaceMismatch("sbeta_inverse expects a zw polynomial")
    _check_backend(q, beta)
    z_img, w_img = _inverse_images(beta)
    return _substitute(q, z_img, w_img, Space.XY)


def pair_to_curve(f1: UnivarPoly, f2: UnivarPoly, beta) -> BivarPoly:
    """The xy polynomial whose real zero set contains the curve F1(z) = F2(z_beta)."""
    beta = _as_beta(beta)
    if f1.is_zero() and f2.is_zero():
        raise ValueError("pair_to_curve needs at least one nonzero polynomial")
    g = embed_univar(f1, "first_var") - embed_univar(f2, "second_var")
    return sbeta_inverse(g, beta)
