"""Greatest common divisor of real bivariate polynomials with rational coefficients.

The polynomials are viewed as univariate in ``y`` over ``Q[x]``.  Contents
(gcds of the ``Q[x]`` coefficients) are split off and the primitive parts are
run through a subresultant pseudo-remainder sequence, which keeps the
intermediate ``Q[x]`` coefficients from growing exponentially.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendError
from .poly import BivarPoly, Space

__all__ = ["bp_gcd_real"]

# Univariate polynomials over Q are lists of Fraction, index = power of x,
# trimmed so the last entry is nonzero; [] is zero.
UPoly = list


def _trim(a: UPoly) -> UPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def _u_neg(a: UPoly) -> UPoly:
    return [-c for c in a]


def _u_mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _u_pow(a: UPoly, n: int) -> UPoly:
    out = [Fraction(1)]
    for _ in range(n):
        out = _u_mul(out, a)
    return out


def _u_divmod(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lb
        q[shift] = f
        for k, cb in enumerate(b):
            r[shift + k] -= f * cb
        r.pop()
        _trim(r)
    return _trim(q), r


def _u_div_exact(a: UPoly, b: UPoly) -> UPoly:
    q, r = _u_divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in Q[x]")
    return q


def _u_monic(a: UPoly) -> UPoly:
    if not a:
        return a
    lc = a[-1]
    return [c / lc for c in a]


def _u_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, _u_divmod(a, b)[1]
    return _u_monic(a)


# Polynomials in (Q[x])[y]: list of UPoly indexed by the power of y.

def _from_bivar(p: BivarPoly) -> list[UPoly]:
    if p.is_zero():
        return []
    dy = max(j for _, j in p.terms)
    rows: list[UPoly] = [[] for _ in range(dy + 1)]
    for (i, j), c in p.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c.re
    return [_trim(r) for r in rows]


def _to_bivar(rows: list[UPoly], space: Space) -> BivarPoly:
    terms = {}
    for j, row in enumerate(rows):
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return BivarPoly(terms, space, True)


def _y_trim(a: list[UPoly]) -> list[UPoly]:
    while a and not a[-1]:
        a.pop()
    return a


def _content(a: list[UPoly]) -> UPoly:
    g: UPoly = []
    for c in a:
        if c:
            g = _u_gcd(g, c) if g else _u_monic(c)
            if len(g) == 1:
                break
    return g


def _prem(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b`` in ``(Q[x])[y]``."""
    r = [list(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [_u_mul(c, lb) for c in r]
        for k, cb in enumerate(b):
            r[shift + k] = _u_add(r[shift + k], _u_neg(_u_mul(lr, cb)))
        r.pop()
        _y_trim(r)
        steps -= 1
    if steps > 0:
        f = _u_pow(lb, steps)
        r = [_u_mul(c, f) for c in r]
    return r


def _subresultant_gcd(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    """Primitive gcd of primitive ``a``, ``b`` with ``deg_y a >= deg_y b >= 1``."""
    g: UPoly = [Fraction(1)]
    h: UPoly = [Fraction(1)]
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            return [[Fraction(1)]]
        divisor = _u_mul(g, _u_pow(h, delta))
        a, b = b, [_u_div_exact(c, divisor) for c in r]
        g = a[-1]
        if delta:
            h = _u_div_exact(_u_pow(g, delta), _u_pow(h, delta - 1))
    cont = _content(b)
    return [_u_div_exact(c, cont) for c in b]


def bp_gcd_real(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    """Primitive gcd of two exact real polynomials.

    The result has integer coefficients with gcd 1 and a positive leading
    coefficient in graded-lex order; ``gcd(0, 0)`` is the zero polynomial.
    """
    for p in (a, b):
        if not p.is_exact:
            raise BackendError("bp_gcd_real needs exact coefficients")
        if not p.is_real():
            raise BackendError("bp_gcd_real needs purely real coefficients")
    space = a.space
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    ra, rb = _from_bivar(a), _from_bivar(b)
    ca, cb = _content(ra), _content(rb)
    cont = _u_gcd(ca, cb)
    pa = [_u_div_exact(c, ca) for c in ra]
    pb = [_u_div_exact(c, cb) for c in rb]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    if len(pb) == 1:
        core: list[UPoly] = [[Fraction(1)]]
    else:
        core = _subresultant_gcd(pa, pb)
    result = [_u_mul(cont, c) for c in core]
    return _to_bivar(result, space).primitive()
