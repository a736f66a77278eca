"""Sparse bivariate and dense univariate polynomials over :class:`Scalar`.

A :class:`BivarPoly` is tagged with the plane it lives in: ``Space.XY`` for
polynomials in ``(x, y)`` and ``Space.ZW`` for polynomials in ``(z, z_beta)``
(printed as ``z`` and ``zb``).  Monomials are exponent pairs ``(i, j)``
ordered graded-lexicographically with the first variable largest.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from .errors import (
    DivisionByZeroPoly,
    MixedBackend,
    NotDivisible,
    ParseError,
    SpaceMismatch,
)
from .scalars import DEFAULT_TOL, Scalar, ToleranceConfig, scalar_from_json, scalar_to_json

__all__ = [
    "Space",
    "NEG_INF",
    "BivarPoly",
    "UnivarPoly",
    "grlex_key",
    "bp_arith",
    "bp_divmod",
    "bp_divide_exact",
    "homogeneous_part",
    "re_im_split",
    "evaluate",
    "embed_univar",
    "poly_to_json",
    "poly_from_json",
    "univar_to_json",
    "univar_from_json",
]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


class Space(enum.Enum):
    XY = "xy"
    ZW = "zw"

    @property
    def names(self) -> tuple[str, str]:
        return ("x", "y") if self is Space.XY else ("z", "zb")


def grlex_key(mono: tuple[int, int]) -> tuple[int, int]:
    return (mono[0] + mono[1], mono[0])


def _lift(c, exact: bool) -> Scalar:
    if isinstance(c, Scalar):
        return c
    if isinstance(c, (float, complex)):
        if exact:
            raise MixedBackend("float coefficient for an exact polynomial")
        return Scalar.approx(complex(c))
    return Scalar(c, 0, exact=exact)


class BivarPoly:
    """Immutable sparse polynomial in two variables."""

    __slots__ = ("_terms", "_space", "_exact")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None,
                 space: Space = Space.XY, exact: bool | None = None):
        terms = dict(terms or {})
        if exact is None:
            kinds = {c.is_exact for c in terms.values() if isinstance(c, Scalar)}
            if len(kinds) > 1:
                raise MixedBackend("polynomial mixes exact and approximate coefficients")
            if kinds:
                exact = kinds.pop()
            else:
                exact = not any(isinstance(c, (float, complex)) for c in terms.values())
        clean = {}
        for mono, c in terms.items():
            i, j = mono
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {mono!r}")
            c = _lift(c, exact)
            if c.is_exact != exact:
                raise MixedBackend("polynomial mixes exact and approximate coefficients")
            if not c.is_zero():
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._space = Space(space)
        self._exact = exact

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, space: Space = Space.XY, exact: bool = True) -> BivarPoly:
        return cls({}, space, exact)

    @classmethod
    def constant(cls, c, space: Space = Space.XY, exact: bool | None = None) -> BivarPoly:
        if exact is None:
            exact = c.is_exact if isinstance(c, Scalar) else not isinstance(c, (float, complex))
        return cls({(0, 0): c}, space, exact)

    @classmethod
    def var(cls, index: int, space: Space = Space.XY, exact: bool = True) -> BivarPoly:
        mono = (1, 0) if index == 0 else (0, 1)
        return cls({mono: 1}, space, exact)

    # -- accessors ----------------------------------------------------------
    @property
    def space(self) -> Space:
        return self._space

    @property
    def is_exact(self) -> bool:
        return self._exact

    @property
    def terms(self) -> dict[tuple[int, int], Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i: int, j: int) -> Scalar:
        return self._terms.get((i, j), Scalar.zero(self._exact))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def sorted_monomials(self) -> list[tuple[int, int]]:
        return sorted(self._terms, key=grlex_key, reverse=True)

    def leading_monomial(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coeff(self) -> Scalar:
        return self._terms[self.leading_monomial()]

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._terms}) <= 1

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: BivarPoly):
        if other._space is not self._space:
            raise SpaceMismatch(f"{self._space.value} polynomial combined with {other._space.value} polynomial")
        if other._exact != self._exact:
            raise MixedBackend("cannot combine exact and approximate polynomials")

    def _as_poly(self, other) -> BivarPoly | None:
        if isinstance(other, BivarPoly):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int, Fraction, float, complex)):
            return BivarPoly.constant(_lift(other, self._exact), self._space, self._exact)
        return None

    def __add__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out[m] + c if m in out else c
        return BivarPoly(out, self._space, self._exact)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({m: -c for m, c in self._terms.items()}, self._space, self._exact)

    def __sub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction, float, complex)):
            s = _lift(other, self._exact)
            if s.is_exact != self._exact:
                raise MixedBackend("cannot scale by a scalar of the other backend")
            return BivarPoly({m: c * s for m, c in self._terms.items()}, self._space, self._exact)
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Scalar] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                m = (i1 + i2, j1 + j2)
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return BivarPoly(out, self._space, self._exact)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BivarPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BivarPoly.constant(1, self._space, self._exact)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return (self._space is other._space and self._exact == other._exact
                    and self._terms == other._terms)
        return NotImplemented

    def __hash__(self):
        return hash((self._space, self._exact, frozenset(self._terms.items())))

    # -- conversions --------------------------------------------------------
    def map_coeffs(self, fn) -> BivarPoly:
        new = {m: fn(c) for m, c in self._terms.items()}
        exact = self._exact
        if new:
            exact = next(iter(new.values())).is_exact
        return BivarPoly(new, self._space, exact)

    def to_approx(self) -> BivarPoly:
        return BivarPoly({m: c.to_approx() for m, c in self._terms.items()}, self._space, False)

    def conj(self) -> BivarPoly:
        return self.map_coeffs(Scalar.conj)

    def with_space(self, space: Space) -> BivarPoly:
        return BivarPoly(self._terms, space, self._exact)

    def primitive(self) -> BivarPoly:
        """Integer-coefficient primitive form with positive grlex-leading coefficient.

        Only defined for exact real polynomials.
        """
        if not self._exact or not self.is_real():
            raise ValueError("primitive() needs an exact real polynomial")
        if not self._terms:
            return self
        coeffs = [c.re for c in self._terms.values()]
        lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        ints = {m: c.re * lcm for m, c in self._terms.items()}
        g = reduce(math.gcd, (abs(v.numerator) for v in ints.values()))
        sign = 1 if ints[self.leading_monomial()] > 0 else -1
        return BivarPoly({m: Fraction(sign * v.numerator // g) for m, v in ints.items()},
                         self._space, True)

    def monic(self) -> BivarPoly:
        if not self._terms:
            return self
        return self * (1 / self.leading_coeff())

    def __repr__(self):
        return f"BivarPoly({self}, space={self._space.value})"

    def __str__(self):
        if not self._terms:
            return "0"
        a, b = self._space.names
        parts = []
        for i, j in self.sorted_monomials():
            c = self._terms[(i, j)]
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name for name, e in ((a, i), (b, j)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class UnivarPoly:
    """Immutable dense polynomial in one variable; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("_coeffs", "_exact")

    def __init__(self, coeffs: Iterable = (), exact: bool | None = None):
        coeffs = list(coeffs)
        if exact is None:
            kinds = {c.is_exact for c in coeffs if isinstance(c, Scalar)}
            if len(kinds) > 1:
                raise MixedBackend("polynomial mixes exact and approximate coefficients")
            exact = kinds.pop() if kinds else not any(isinstance(c, (float, complex)) for c in coeffs)
        cs = [_lift(c, exact) for c in coeffs]
        if any(c.is_exact != exact for c in cs):
            raise MixedBackend("polynomial mixes exact and approximate coefficients")
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)
        self._exact = exact

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def is_exact(self) -> bool:
        return self._exact

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Scalar.zero(self._exact)

    def __call__(self, t: Scalar) -> Scalar:
        acc = Scalar.zero(self._exact)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def to_approx(self) -> UnivarPoly:
        return UnivarPoly([c.to_approx() for c in self._coeffs], exact=False)

    def __add__(self, other: UnivarPoly) -> UnivarPoly:
        n = max(len(self._coeffs), len(other._coeffs))
        return UnivarPoly([self.coeff(k) + other.coeff(k) for k in range(n)], exact=self._exact)

    def __sub__(self, other: UnivarPoly) -> UnivarPoly:
        n = max(len(self._coeffs), len(other._coeffs))
        return UnivarPoly([self.coeff(k) - other.coeff(k) for k in range(n)], exact=self._exact)

    def __mul__(self, s) -> UnivarPoly:
        if isinstance(s, UnivarPoly):
            out = [Scalar.zero(self._exact)] * (len(self._coeffs) + len(s._coeffs) - 1 or 0)
            for a, ca in enumerate(self._coeffs):
                for b, cb in enumerate(s._coeffs):
                    out[a + b] = out[a + b] + ca * cb
            return UnivarPoly(out, exact=self._exact)
        return UnivarPoly([c * s for c in self._coeffs], exact=self._exact)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, UnivarPoly):
            return self._exact == other._exact and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self._exact, self._coeffs))

    def __repr__(self):
        return f"UnivarPoly([{', '.join(map(str, self._coeffs))}])"


# -- module-level operations ------------------------------------------------

def bp_arith(a: BivarPoly, b: BivarPoly, op: str) -> BivarPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def bp_divmod(a: BivarPoly, b: BivarPoly) -> tuple[BivarPoly, BivarPoly]:
    """Multivariate division of ``a`` by the single divisor ``b`` under grlex."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    lm = b.leading_monomial()
    lc = b._terms[lm]
    tail = [(m, c) for m, c in b._terms.items() if m != lm]
    work = dict(a._terms)
    quot: dict[tuple[int, int], Scalar] = {}
    rem: dict[tuple[int, int], Scalar] = {}
    while work:
        m = max(work, key=grlex_key)
        c = work.pop(m)
        if m[0] >= lm[0] and m[1] >= lm[1]:
            t = (m[0] - lm[0], m[1] - lm[1])
            f = c / lc
            quot[t] = quot[t] + f if t in quot else f
            for (bi, bj), bc in tail:
                key = (bi + t[0], bj + t[1])
                v = work[key] - f * bc if key in work else -(f * bc)
                if v.is_zero():
                    work.pop(key, None)
                else:
                    work[key] = v
        else:
            rem[m] = c
    return BivarPoly(quot, a._space, a._exact), BivarPoly(rem, a._space, a._exact)


def division_residual(a: BivarPoly, rem: BivarPoly) -> float:
    """Largest remainder coefficient relative to the dividend's largest coefficient."""
    if rem.is_zero():
        return 0.0
    scale = a.max_abs_coeff() or 1.0
    return rem.max_abs_coeff() / scale


def bp_divide_exact(a: BivarPoly, b: BivarPoly, tol: ToleranceConfig = DEFAULT_TOL) -> BivarPoly:
    """Quotient ``q`` with ``b*q == a``; raises :class:`NotDivisible` otherwise.

    On the approximate backend the remainder may be nonzero as long as its
    coefficients are within ``tol.residual_tol`` of the dividend's scale.
    """
    q, r = bp_divmod(a, b)
    if r.is_zero():
        return q
    if not a.is_exact:
        res = division_residual(a, r)
        if res <= tol.residual_tol:
            return q
        raise NotDivisible(f"remainder residual {res:.3e} exceeds tolerance", remainder=r)
    raise NotDivisible(f"nonzero remainder {r}", remainder=r)


def homogeneous_part(p: BivarPoly, m: int) -> BivarPoly:
    return BivarPoly({k: c for k, c in p.items() if k[0] + k[1] == m}, p.space, p.is_exact)


def re_im_split(p: BivarPoly) -> tuple[BivarPoly, BivarPoly]:
    if p.space is not Space.XY:
        raise SpaceMismatch("re_im_split expects an xy polynomial")
    ex = p.is_exact
    re_part = {m: Scalar(c.re, 0, exact=ex) for m, c in p.items()}
    im_part = {m: Scalar(c.im, 0, exact=ex) for m, c in p.items()}
    return BivarPoly(re_part, p.space, ex), BivarPoly(im_part, p.space, ex)


def evaluate(p: BivarPoly, u: Scalar, v: Scalar) -> Scalar:
    """Horner evaluation in ``v`` of Horner-evaluated coefficients in ``u``."""
    for s in (u, v):
        if s.is_exact != p.is_exact:
            raise MixedBackend("evaluation point backend differs from polynomial backend")
    rows: dict[int, dict[int, Scalar]] = {}
    for (i, j), c in p.items():
        rows.setdefault(j, {})[i] = c
    zero = Scalar.zero(p.is_exact)

    def horner(coeffs: dict[int, Scalar], t: Scalar) -> Scalar:
        acc = zero
        for k in range(max(coeffs), -1, -1):
            acc = acc * t + coeffs.get(k, zero)
        return acc

    if not rows:
        return zero
    return horner({j: horner(row, u) for j, row in rows.items()}, v)


def embed_univar(f: UnivarPoly, which: str = "first_var", space: Space = Space.ZW) -> BivarPoly:
    if which not in ("first_var", "second_var"):
        raise ValueError(f"which must be first_var or second_var, got {which!r}")
    first = which == "first_var"
    terms = {((k, 0) if first else (0, k)): c for k, c in enumerate(f.coeffs)}
    return BivarPoly(terms, space, f.is_exact)


# -- JSON ------------------------------------------------------------------

def poly_to_json(p: BivarPoly) -> dict:
    return {
        "space": p.space.value,
        "terms": [{"e": [i, j], "c": scalar_to_json(p.coeff(i, j))} for i, j in p.sorted_monomials()],
    }


def poly_from_json(data: Mapping) -> BivarPoly:
    try:
        space = Space(data["space"])
        raw = data["terms"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polynomial JSON: {exc}") from None
    terms: dict[tuple[int, int], Scalar] = {}
    for t in raw:
        try:
            i, j = t["e"]
            c = scalar_from_json(t["c"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed term {t!r}") from None
        if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
            raise ParseError(f"bad exponent in term {t!r}")
        if (i, j) in terms:
            terms[(i, j)] = terms[(i, j)] + c
        else:
            terms[(i, j)] = c
    kinds = {c.is_exact for c in terms.values()}
    if len(kinds) > 1:
        raise ParseError("polynomial mixes exact and approximate coefficients")
    return BivarPoly(terms, space, kinds.pop() if kinds else True)


def univar_to_json(f: UnivarPoly) -> dict:
    return {"coeffs": [scalar_to_json(c) for c in f.coeffs]}


def univar_from_json(data) -> UnivarPoly:
    """Accepts ``{"coeffs": [...]}`` or a bare list; index is the power."""
    raw = data["coeffs"] if isinstance(data, Mapping) else data
    if not isinstance(raw, list):
        raise ParseError("univariate polynomial must be a list of coefficients")
    coeffs = [scalar_from_json(c) for c in raw]
    kinds = {c.is_exact for c in coeffs}
    if len(kinds) > 1:
        raise ParseError("polynomial mixes exact and approximate coefficients")
    return UnivarPoly(coeffs, exact=kinds.pop() if kinds else True)
