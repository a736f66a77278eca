"""Complex scalars with an exact (Gaussian rational) and an approximate backend.

Exact scalars hold a pair of :class:`fractions.Fraction`; approximate ones a
pair of binary64 floats.  The two never mix implicitly: combining them raises
:class:`~lspecial.errors.MixedBackend` unless one side is converted first with
:meth:`Scalar.to_approx`.  Plain Python ``int`` operands are accepted by both
backends since they are exact in either.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from typing import Sequence

from .errors import DivisionByZero, MixedBackend, ParseError, ToleranceUnreachable, ZeroDenominator

__all__ = [
    "Scalar",
    "ToleranceConfig",
    "DEFAULT_TOL",
    "ZERO",
    "ONE",
    "I",
    "scalar_arith",
    "rat_parse",
    "parse_scalar",
    "rat_to_str",
    "scalar_to_json",
    "scalar_from_json",
    "nullspace",
    "exact_rank",
]


@dataclass(frozen=True)
class ToleranceConfig:
    residual_tol: float = 1e-9
    rank_tol: float = 1e-8
    bisection_tol: float = 1e-14

    def __post_init__(self):
        for name in ("residual_tol", "rank_tol", "bisection_tol"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_TOL = ToleranceConfig()


class Scalar:
    """Immutable complex number; ``is_exact`` tells which backend it uses."""

    __slots__ = ("_re", "_im", "_exact")

    def __init__(self, re, im=0, *, exact: bool):
        if exact:
            if isinstance(re, float) or isinstance(im, float):
                raise MixedBackend("float given to an exact Scalar; use Scalar.approx")
            self._re = Fraction(re)
            self._im = Fraction(im)
        else:
            self._re = float(re)
            self._im = float(im)
        self._exact = exact

    @classmethod
    def rational(cls, re=0, im=0) -> Scalar:
        return cls(re, im, exact=True)

    @classmethod
    def approx(cls, re=0.0, im=0.0) -> Scalar:
        if isinstance(re, complex):
            re, im = re.real, re.imag + im
        return cls(re, im, exact=False)

    @classmethod
    def zero(cls, exact: bool) -> Scalar:
        return cls(0, 0, exact=exact)

    @classmethod
    def one(cls, exact: bool) -> Scalar:
        return cls(1, 0, exact=exact)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @property
    def is_exact(self) -> bool:
        return self._exact

    def to_approx(self) -> Scalar:
        """Explicit (lossy) promotion to the float backend."""
        if not self._exact:
            return self
        return Scalar(float(self._re), float(self._im), exact=False)

    def to_complex(self) -> complex:
        return complex(float(self._re), float(self._im))

    __complex__ = to_complex

    def is_real(self) -> bool:
        return self._im == 0

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other._exact != self._exact:
                raise MixedBackend("cannot combine exact and approximate scalars")
            return other
        if isinstance(other, Integral):
            return Scalar(int(other), 0, exact=self._exact)
        if isinstance(other, Fraction):
            if not self._exact:
                raise MixedBackend("Fraction combined with an approximate scalar")
            return Scalar(other, 0, exact=True)
        if isinstance(other, (float, complex)):
            if self._exact:
                raise MixedBackend("float combined with an exact scalar")
            return Scalar.approx(complex(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self._re + o._re, self._im + o._im, exact=self._exact)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self._re - o._re, self._im - o._im, exact=self._exact)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        if not b and not d:
            return Scalar(a * c, 0, exact=self._exact)
        return Scalar(a * c - b * d, a * d + b * c, exact=self._exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by a zero scalar")
        a, b, c, d = self._re, self._im, o._re, o._im
        if not d:
            return Scalar(a / c, b / c, exact=self._exact)
        den = c * c + d * d
        return Scalar((a * c + b * d) / den, (b * c - a * d) / den, exact=self._exact)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar(-self._re, -self._im, exact=self._exact)

    def __pos__(self):
        return self

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            return Scalar.one(self._exact) / self ** (-n)
        result = Scalar.one(self._exact)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> Scalar:
        return Scalar(self._re, -self._im, exact=self._exact)

    def abs2(self) -> Scalar:
        """|a|^2 as a real scalar on the same backend."""
        return Scalar(self._re * self._re + self._im * self._im, 0, exact=self._exact)

    def __abs__(self) -> float:
        return math.hypot(float(self._re), float(self._im))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other._exact != self._exact:
                return False
            return self._re == other._re and self._im == other._im
        if isinstance(other, (Integral, Fraction, float)):
            return self._im == 0 and self._re == other
        if isinstance(other, complex):
            return self._re == other.real and self._im == other.imag
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        kind = "rational" if self._exact else "approx"
        return f"Scalar.{kind}({self._re!s}, {self._im!s})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        sign = "-" if self._im < 0 else "+"
        return f"({self._re}{sign}{abs(self._im)}i)"


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)
I = Scalar.rational(0, 1)


def scalar_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Dispatch one of ``add, sub, mul, div, conj, abs2`` by name."""
    if op == "conj":
        return a.conj()
    if op == "abs2":
        return a.abs2()
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def rat_parse(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(num, den)


def is_rational_text(text: str) -> bool:
    return _RAT_RE.match(text) is not None


def parse_scalar(text: str) -> Scalar:
    """Parse a real number; ``p/q`` or integer text is exact, decimals are approximate."""
    if is_rational_text(text):
        return Scalar.rational(rat_parse(text))
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite number: {text!r}")
    return Scalar.approx(value)


def rat_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def scalar_to_json(s: Scalar) -> list:
    if s.is_exact:
        return [rat_to_str(s.re), rat_to_str(s.im)]
    return [s.re, s.im]


def scalar_from_json(value) -> Scalar:
    """Inverse of :func:`scalar_to_json`; a bare number or string is taken as real."""
    if not isinstance(value, (list, tuple)):
        value = [value, 0 if isinstance(value, str) else 0.0]
    if len(value) != 2:
        raise ParseError(f"complex value must be [re, im], got {value!r}")
    re_part, im_part = value
    kinds = {isinstance(v, str) for v in value}
    if kinds == {True}:
        return Scalar.rational(rat_parse(re_part), rat_parse(im_part))
    if kinds == {False}:
        for v in value:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"bad numeric component {v!r}")
        return Scalar.approx(float(re_part), float(im_part))
    raise ParseError(f"mixed exact/approximate components in {value!r}")


def _backend_of(rows: Sequence[Sequence[Scalar]]) -> bool:
    kinds = {entry.is_exact for row in rows for entry in row}
    if len(kinds) > 1:
        raise MixedBackend("matrix mixes exact and approximate entries")
    return kinds.pop()


def _basis_from_rref(rows, pivots, n, zero, one):
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [zero] * n
        v[free] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(v)
    return basis


def _exact_rref(rows, n):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _approx_rref(rows, n, rank_tol):
    # complete pivoting Gauss-Jordan on Python complex numbers
    a = [[e.to_complex() for e in row] for row in rows]
    m = len(a)
    cols = list(range(n))
    pivots = []
    first = None
    for k in range(min(m, n)):
        best, bi, bj = 0.0, -1, -1
        for i in range(k, m):
            row = a[i]
            for j in cols:
                v = abs(row[j])
                if v > best:
                    best, bi, bj = v, i, j
        if first is None:
            first = best
        if best == 0.0 or best <= rank_tol * first:
            break
        a[k], a[bi] = a[bi], a[k]
        inv = 1 / a[k][bj]
        a[k] = [e * inv for e in a[k]]
        a[k][bj] = 1.0
        for i in range(m):
            if i != k and a[i][bj] != 0:
                f = a[i][bj]
                rk = a[k]
                a[i] = [x - f * y for x, y in zip(a[i], rk)]
                a[i][bj] = 0.0
        cols.remove(bj)
        pivots.append(bj)
    rank = len(pivots)
    out = [[Scalar.approx(e) for e in row] for row in a[:rank]]
    return out, pivots


def nullspace(M: Sequence[Sequence[Scalar]], tol: ToleranceConfig = DEFAULT_TOL) -> list[list[Scalar]]:
    """Basis of the kernel of ``M`` (list of column-vectors as lists).

    Exact matrices are reduced with exact arithmetic.  Approximate matrices
    use complete pivoting and treat pivots below ``tol.rank_tol`` times the
    first (largest) pivot as zero; every returned vector is checked against
    ``max|Mv| <= residual_tol * max|M| * max|v|``.
    """
    if not M or not M[0]:
        raise ValueError("nullspace needs at least one row and one column")
    n = len(M[0])
    if any(len(row) != n for row in M):
        raise ValueError("ragged matrix")
    exact = _backend_of(M)
    zero, one = Scalar.zero(exact), Scalar.one(exact)
    if exact:
        rows, pivots = _exact_rref(M, n)
        return _basis_from_rref(rows, pivots, n, zero, one)

    rows, pivots = _approx_rref(M, n, tol.rank_tol)
    basis = _basis_from_rref(rows, pivots, n, zero, one)
    scale = max(abs(e) for row in M for e in row)
    for v in basis:
        vmax = max(abs(e) for e in v)
        worst = max(abs(sum((a * b for a, b in zip(row, v)), zero)) for row in M)
        if worst > tol.residual_tol * scale * vmax:
            raise ToleranceUnreachable(
                f"kernel vector residual {worst:.3e} exceeds bound; matrix is ill-conditioned for rank_tol={tol.rank_tol}"
            )
    return basis


def exact_rank(M: Sequence[Sequence[Scalar]]) -> int:
    if not M or not M[0]:
        return 0
    if not _backend_of(M):
        raise MixedBackend("exact_rank needs an exact matrix")
    rows, pivots = _exact_rref(M, len(M[0]))
    return len(pivots)
