"""The explicit quartic L-special domain and its admissible quintic pair.

The curve is ``P(x, y) = 1`` with

    P = x^4 + (2/beta - 4 alpha^2) x^2 y^2 + y^4 / beta^2,

which factors into four complex lines ``x - (+-alpha +- i alpha*) y`` where
``alpha^2 + alpha*^2 = 1/beta``.  Under S_beta each line becomes a multiple
``C_pq (z - gamma_pq z_beta)``.  Choosing ``alpha*/alpha`` as below makes
consecutive ``gamma_pq`` differ by the fifth root of unity ``e^{i phi}``,
``phi = 2 pi / 5``, except for one remaining condition on beta, which is
solved by bisection.  Then S_beta P equals ``C (z^5 - gamma^5 z_beta^5) / (z - gamma z_beta)``
and ``F1 = C z^5 - z``, ``F2 = C gamma^5 z_beta^5 - gamma z_beta`` is admissible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import BetaOutOfRange, DivisionByZero, NoSignChange, ToleranceUnreachable, VerificationFailed
from .poly import BivarPoly, Space, UnivarPoly, poly_to_json
from .scalars import DEFAULT_TOL, Scalar, scalar_to_json
from .substitution import BetaParam, pair_to_curve, sbeta_forward, sbeta_inverse
from .trace import boundedness_check, trace_level

__all__ = [
    "PHI",
    "F_INDEX",
    "PRINTED_X2Y2",
    "PRINTED_Y4",
    "QuarticConstruction",
    "alpha_of_beta",
    "gamma_pq",
    "c_pq",
    "g_funcs",
    "h_of_beta",
    "solve_beta",
    "quartic_curve",
    "build_construction",
    "check_construction",
    "verify_construction",
    "construction_report",
    "printed_reference_curve",
]

PHI = 2.0 * math.pi / 5.0
#: exponent of e^{i phi} relating gamma_pq to gamma
F_INDEX = {(0, 0): 2, (0, 1): 1, (1, 0): 3, (1, 1): 4}
#: coefficients of the printed reference curve x^4 + 34.913 x^2 y^2 + 643.992 y^4 = 1
PRINTED_X2Y2 = 34.913
PRINTED_Y4 = 643.992

CHECK_NAMES = ("gamma_align", "factor_ids", "full_identity", "modulus", "boundary")


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not 0.0 < beta < 1.0:
        raise BetaOutOfRange(f"beta must lie in (0, 1), got {beta}")
    return beta


def alpha_of_beta(beta: float) -> tuple[float, float]:
    """Positive (alpha, alpha*) with alpha*/alpha = (1+b)(1-cos phi)/((1-b) sin phi) and alpha^2 + alpha*^2 = 1/b."""
    beta = _check_beta(beta)
    k = (1.0 + beta) * (1.0 - math.cos(PHI)) / ((1.0 - beta) * math.sin(PHI))
    alpha = 1.0 / math.sqrt(beta * (1.0 + k * k))
    return alpha, k * alpha


def _line_terms(alpha, alpha_star, beta, p, q) -> complex:
    return (-1) ** q * beta * alpha_star + (-1) ** (p + 1) * 1j * beta * alpha


def gamma_pq(alpha: float, alpha_star: float, beta: float, p: int, q: int) -> Scalar:
    t = _line_terms(alpha, alpha_star, beta, p, q)
    den = 1.0 + t
    if den == 0:
        raise DivisionByZero("gamma_pq denominator vanished")
    return Scalar.approx((beta + t) / den)


def c_pq(alpha: float, alpha_star: float, beta: float, p: int, q: int) -> Scalar:
    return Scalar.approx((1.0 + _line_terms(alpha, alpha_star, beta, p, q)) / (1.0 - beta))


def g_funcs(beta: float) -> tuple[Scalar, Scalar]:
    beta = _check_beta(beta)
    a, s = alpha_of_beta(beta)
    g1 = gamma_pq(a, s, beta, 1, 0).to_complex() / beta
    g2 = cmath.exp(1j * PHI) * gamma_pq(a, s, beta, 0, 0).to_complex() / beta
    return Scalar.approx(g1), Scalar.approx(g2)


def h_of_beta(beta: float) -> float:
    g1, g2 = g_funcs(beta)
    return g1.re - g2.re


def solve_beta(bracket_lo: float = 0.01, bracket_hi: float = 0.1,
               tol: float = DEFAULT_TOL.bisection_tol, max_iter: int = 200) -> float:
    """Bisect Re g1 - Re g2 on the bracket; the root is where the last gamma condition holds."""
    lo, hi = float(bracket_lo), float(bracket_hi)
    if not lo < hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    _check_beta(lo)
    _check_beta(hi)
    if not tol > 0:
        raise ValueError("tol must be positive")
    h_lo, h_hi = h_of_beta(lo), h_of_beta(hi)
    if h_lo == 0:
        return _accept(lo)
    if h_hi == 0:
        return _accept(hi)
    if (h_lo < 0) == (h_hi < 0):
        raise NoSignChange(f"Re g1 - Re g2 has the same sign at {lo} ({h_lo:.6g}) and {hi} ({h_hi:.6g})")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            raise ToleranceUnreachable(f"bracket width {hi - lo:.3e} cannot shrink below tol={tol:.1e}")
        h_mid = h_of_beta(mid)
        if h_mid == 0:
            return _accept(mid)
        if (h_mid < 0) == (h_lo < 0):
            lo, h_lo = mid, h_mid
        else:
            hi, h_hi = mid, h_mid
    else:
        raise ToleranceUnreachable(f"bisection did not reach tol={tol:.1e} in {max_iter} steps")
    best = lo if abs(h_lo) <= abs(h_hi) else hi
    return _accept(best)


def _accept(beta0: float) -> float:
    g1, g2 = g_funcs(beta0)
    if not g1.im * g2.im > 0:
        raise VerificationFailed("im_sign", message=f"Im g1 * Im g2 = {g1.im * g2.im:.6g} is not positive at {beta0}")
    return beta0


def quartic_curve(beta: float, alpha: float) -> BivarPoly:
    """Homogeneous quartic P; the domain boundary is P = 1."""
    return BivarPoly(
        {(4, 0): 1.0, (2, 2): 2.0 / beta - 4.0 * alpha * alpha, (0, 4): 1.0 / beta ** 2},
        Space.XY,
        exact=False,
    )


def printed_reference_curve() -> BivarPoly:
    """The rounded homogeneous quartic printed alongside the figure."""
    return BivarPoly({(4, 0): 1.0, (2, 2): PRINTED_X2Y2, (0, 4): PRINTED_Y4}, Space.XY, exact=False)


@dataclass(frozen=True)
class QuarticConstruction:
    beta0: float
    alpha: float
    alpha_star: float
    phi: float
    gamma: Scalar
    C: Scalar
    C_pq: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]
    curve: BivarPoly
    f1: UnivarPoly
    f2: UnivarPoly
    residuals: dict = field(default_factory=dict, compare=False)

    @property
    def beta(self) -> BetaParam:
        return BetaParam(self.beta0)

    @property
    def defining_polynomial(self) -> BivarPoly:
        return self.curve - 1.0

    def gamma_pq(self, p: int, q: int) -> Scalar:
        return gamma_pq(self.alpha, self.alpha_star, self.beta0, p, q)

    @property
    def x2y2_coefficient(self) -> float:
        return 2.0 / self.beta0 - 4.0 * self.alpha ** 2


def build_construction(beta0: float) -> QuarticConstruction:
    beta0 = _check_beta(beta0)
    alpha, alpha_star = alpha_of_beta(beta0)
    gamma = Scalar.approx(cmath.exp(-1j * PHI) * gamma_pq(alpha, alpha_star, beta0, 0, 1).to_complex())
    cs = tuple(tuple(c_pq(alpha, alpha_star, beta0, p, q) for q in (0, 1)) for p in (0, 1))
    C = cs[0][0] * cs[0][1] * cs[1][0] * cs[1][1]
    zero = Scalar.zero(False)
    f1 = UnivarPoly([zero, Scalar.approx(-1.0), zero, zero, zero, C], exact=False)
    f2 = UnivarPoly([zero, -gamma, zero, zero, zero, C * gamma ** 5], exact=False)
    qc = QuarticConstruction(
        beta0=beta0, alpha=alpha, alpha_star=alpha_star, phi=PHI, gamma=gamma, C=C, C_pq=cs,
        curve=quartic_curve(beta0, alpha), f1=f1, f2=f2,
    )
    qc.residuals.update(check_construction(qc))
    return qc


def _line_factor(alpha, alpha_star, p, q) -> BivarPoly:
    root = (-1) ** p * alpha + (-1) ** q * 1j * alpha_star
    return BivarPoly({(1, 0): 1.0, (0, 1): Scalar.approx(-root)}, Space.XY, exact=False)


def _max_coeff_diff(a: BivarPoly, b: BivarPoly) -> float:
    return (a - b).max_abs_coeff()


def check_construction(qc: QuarticConstruction, boundary_points: int = 32) -> dict[str, float]:
    """Residual of every certificate check; nothing is raised here."""
    beta = BetaParam(qc.beta0)
    unit_phase = cmath.exp(1j * qc.phi)
    gamma = qc.gamma.to_complex()
    out: dict[str, float] = {}

    out["gamma_align"] = max(
        abs(qc.gamma_pq(p, q).to_complex() - unit_phase ** F_INDEX[(p, q)] * gamma) for p, q in F_INDEX
    )

    worst = 0.0
    for p, q in F_INDEX:
        lhs = sbeta_forward(_line_factor(qc.alpha, qc.alpha_star, p, q), beta)
        c = qc.C_pq[p][q]
        rhs = BivarPoly({(1, 0): c, (0, 1): -(c * qc.gamma_pq(p, q))}, Space.ZW, exact=False)
        worst = max(worst, _max_coeff_diff(lhs, rhs))
    out["factor_ids"] = worst

    ell = sbeta_inverse(BivarPoly({(1, 0): 1.0, (0, 1): -qc.gamma}, Space.ZW, exact=False), beta)
    lhs = pair_to_curve(qc.f1, qc.f2, beta)
    out["full_identity"] = _max_coeff_diff(lhs, ell * qc.defining_polynomial)

    root_beta = math.sqrt(qc.beta0)
    out["modulus"] = max(abs(abs(qc.gamma_pq(p, q)) - root_beta) for p, q in F_INDEX)

    worst = 0.0
    try:
        trace = trace_level(qc.curve, 1.0, boundary_points)
    except ValueError:
        worst = math.inf
    else:
        for x, y in trace.points:
            z = Scalar.approx(x, y)
            w = Scalar.approx(x, y / qc.beta0)
            worst = max(worst, abs(qc.f1(z) - qc.f2(w)))
    out["boundary"] = worst
    return out


def verify_construction(qc: QuarticConstruction, tol: float = DEFAULT_TOL.residual_tol) -> dict[str, float]:
    """Recompute all residuals and raise :class:`VerificationFailed` at the first one above ``tol``."""
    residuals = check_construction(qc)
    for name in CHECK_NAMES:
        if not residuals[name] <= tol:
            raise VerificationFailed(name, residuals[name], tol)
    return residuals


def construction_report(qc: QuarticConstruction) -> dict:
    g1, g2 = g_funcs(qc.beta0)
    alpha_sub = 2.0 / qc.beta0 - 4.0 * qc.alpha
    return {
        "beta0": qc.beta0,
        "alpha": qc.alpha,
        "alpha_star": qc.alpha_star,
        "phi": qc.phi,
        "gamma": scalar_to_json(qc.gamma),
        "C": scalar_to_json(qc.C),
        "C_pq": [[scalar_to_json(c) for c in row] for row in qc.C_pq],
        "gamma_pq": [[scalar_to_json(qc.gamma_pq(p, q)) for q in (0, 1)] for p in (0, 1)],
        "g_at_beta0": {"g1": scalar_to_json(g1), "g2": scalar_to_json(g2)},
        "curve": poly_to_json(qc.curve),
        "level": 1.0,
        "defining_polynomial": poly_to_json(qc.defining_polynomial),
        "pair": {
            "f1": [scalar_to_json(c) for c in qc.f1.coeffs],
            "f2": [scalar_to_json(c) for c in qc.f2.coeffs],
        },
        "residuals": dict(qc.residuals),
        "bounded": boundedness_check(qc.beta0, qc.alpha),
        "x2y2_coefficient": qc.x2y2_coefficient,
        "y4_coefficient": 1.0 / qc.beta0 ** 2,
        "printed_x2y2_coefficient": PRINTED_X2Y2,
        "printed_y4_coefficient": PRINTED_Y4,
        "alpha_for_alpha_squared_x2y2": alpha_sub,
        "printed_reference_curve": poly_to_json(printed_reference_curve()),
        "notes": [
            "curve is built from P = x^4 + (2/beta - 4 alpha^2) x^2 y^2 + y^4/beta^2",
            (
                f"printed reference curve has x^2y^2 coefficient {PRINTED_X2Y2}; the formula gives "
                f"{qc.x2y2_coefficient:.6g} at beta0, while 2/beta - 4*alpha gives {alpha_sub:.6g}, "
                "so the printed value appears to use alpha in place of alpha^2"
            ),
            "|gamma_pq| equals sqrt(beta0); the quotients g = gamma/beta therefore have modulus 1/sqrt(beta0)",
        ],
    }
