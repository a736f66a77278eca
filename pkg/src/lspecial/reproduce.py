"""One-shot reproduction of every reported value, as a table of named checks."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .admissibility import (
    diagonal_divides,
    leading_obstruction,
    obstruction_search,
    pair_match,
    real_defining,
)
from .poly import BivarPoly, Space, UnivarPoly, evaluate
from .quartic import PRINTED_X2Y2, build_construction, construction_report, g_funcs, solve_beta
from .scalars import Scalar
from .substitution import sbeta_forward, sbeta_inverse
from .trace import trace_level

__all__ = ["Criterion", "run_all", "random_exact_poly", "ellipse_pair"]


@dataclass
class Criterion:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def random_exact_poly(rng: random.Random, max_deg: int, real: bool = False, max_terms: int | None = None) -> BivarPoly:
    deg = rng.randint(0, max_deg)
    monos = [(i, k - i) for k in range(deg + 1) for i in range(k + 1)]
    count = rng.randint(1, max_terms or len(monos))
    terms = {}
    for mono in rng.sample(monos, min(count, len(monos))):
        re = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        im = 0 if real else Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        terms[mono] = Scalar.rational(re, im)
    # pin the degree with a nonzero top term
    top = (rng.randint(0, deg), 0)
    top = (top[0], deg - top[0])
    terms[top] = Scalar.rational(rng.choice([-3, -2, -1, 1, 2, 3]), 0 if real else rng.randint(-2, 2))
    return BivarPoly(terms, Space.XY, True)


def random_beta(rng: random.Random) -> Fraction:
    den = rng.randint(2, 40)
    return Fraction(rng.randint(1, den - 1), den)


def ellipse_pair(beta: Fraction) -> tuple[UnivarPoly, UnivarPoly]:
    s = 1 / (1 - beta)
    return UnivarPoly([0, 0, s]), UnivarPoly([1, 0, beta * s])


def _golden_g() -> Criterion:
    g1a, g2a = g_funcs(0.01)
    g1b, g2b = g_funcs(0.1)
    got = (g1a.re, g2a.re, g1b.re, g2b.re)
    want = (7.09, 8.89, 2.83, 2.21)
    ok = all(abs(a - b) <= 0.01 for a, b in zip(got, want))
    return Criterion("1 golden g-values", ok, " ".join(f"{a:.4f}" for a in got))


def _root(beta0: float) -> Criterion:
    g1, g2 = g_funcs(beta0)
    qc = build_construction(beta0)
    ok = (0.039 < beta0 < 0.040 and abs(g1.re - g2.re) < 1e-12 and g1.im > 0 and g2.im > 0
          and abs(1 / beta0 ** 2 - 644) <= 1 and abs(qc.alpha - 3.96) <= 0.01)
    return Criterion("2 root location", ok,
                     f"beta0={beta0:.15g} |h|={abs(g1.re - g2.re):.2e} 1/beta0^2={1 / beta0 ** 2:.4f} alpha={qc.alpha:.5f}")


def _certificate(qc) -> Criterion:
    worst = max(qc.residuals.values())
    ok = worst < 1e-9
    return Criterion("3 construction certificate", ok,
                     " ".join(f"{k}={v:.2e}" for k, v in qc.residuals.items()))


def _inconsistency(qc) -> Criterion:
    report = construction_report(qc)
    x2y2 = report["x2y2_coefficient"]
    ok = (abs(x2y2 + 11.97) <= 0.05 and report["printed_x2y2_coefficient"] == PRINTED_X2Y2
          and any("alpha in place of alpha^2" in n for n in report["notes"]))
    return Criterion("4 printed-curve discrepancy recorded", ok,
                     f"formula={x2y2:.4f} printed={PRINTED_X2Y2} alpha-substituted={report['alpha_for_alpha_squared_x2y2']:.4f}")


def _automorphism(rng: random.Random) -> Criterion:
    betas = [random_beta(rng) for _ in range(20)]
    failures = 0
    for k in range(200):
        beta = betas[k % 20]
        p = random_exact_poly(rng, 10)
        fp = sbeta_forward(p, beta)
        if sbeta_inverse(fp, beta) != p or fp.degree != p.degree:
            failures += 1
        dq = rng.randint(0, 5)
        q = random_exact_poly(rng, dq)
        r = random_exact_poly(rng, 10 - dq)
        if sbeta_forward(q * r, beta) != sbeta_forward(q, beta) * sbeta_forward(r, beta):
            failures += 1
    return Criterion("5 exact automorphism suite", failures == 0, f"200 polys x 20 betas, failures={failures}")


def _nonexistence(qc, rng: random.Random) -> Criterion:
    r4 = obstruction_search(qc.defining_polynomial, qc.beta, 4)
    r7 = obstruction_search(qc.defining_polynomial, qc.beta, 7)
    betas = [random_beta(rng) for _ in range(10)]
    lead_ok = all(leading_obstruction(n, b) == 0 for n in range(3, 9) for b in betas)
    lead2 = all(leading_obstruction(2, b) == 1 for b in betas)
    ok = not r4.exists_admissible and not r7.exists_admissible and lead_ok and lead2
    return Criterion("6 degree obstructions", ok,
                     f"d=4:{r4.exists_admissible} d=7:{r7.exists_admissible} lead(3..8)=0:{lead_ok} lead(2)=1:{lead2}")


def _existence(qc) -> Criterion:
    beta = Fraction(1, 2)
    x, y = BivarPoly.var(0), BivarPoly.var(1)
    ellipse = x * x + y * y * (1 / beta) - 1
    re = obstruction_search(ellipse, beta, 2)
    k1, k2 = ellipse_pair(beta)
    res_e = min((pair_match(s.f1, s.f2, k1, k2)[2] for s in re.genuine_solutions), default=math.inf)
    rq = obstruction_search(qc.defining_polynomial, qc.beta, 5)
    res_q = min((pair_match(s.f1, s.f2, qc.f1, qc.f2)[2] for s in rq.genuine_solutions), default=math.inf)
    ok = re.exists_admissible and rq.exists_admissible and res_e < 1e-7 and res_q < 1e-7
    return Criterion("7 existence recovery", ok, f"ellipse residual={res_e:.2e} quartic residual={res_q:.2e}")


def _real_defining_and_diagonal(rng: random.Random) -> Criterion:
    bad = 0
    for _ in range(100):
        r = random_exact_poly(rng, 4, real=True)
        if r.degree < 1:
            r = r + BivarPoly.var(0)
        c = Scalar.rational(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.choice([-3, -1, 1, 2]))
        if real_defining(r * c) != r.primitive():
            bad += 1
    bad_division = 0
    for n in range(1, 13):
        for k in range(1, 13):
            for a, b in ((1, 1), (1, -1), (2, 3)):
                for c, d in ((1, 1), (1, -1), (1, 2)):
                    p = BivarPoly({(n, 0): a, (0, n): b})
                    q = BivarPoly({(k, 0): c, (0, k): d})
                    if diagonal_divides(p, q) and n % k:
                        bad_division += 1
    ok = bad == 0 and bad_division == 0
    return Criterion("8 real_defining and diagonal divisibility", ok, f"real_defining failures={bad} divisibility without k|n={bad_division}")


def _trace(qc) -> Criterion:
    tr = trace_level(qc.curve, 1.0, 720)
    one = Scalar.approx(1.0)
    worst = max(abs(evaluate(qc.curve, Scalar.approx(px), Scalar.approx(py)) - one) for px, py in tr.points)
    r0 = math.hypot(*tr.points[0])
    r90 = math.hypot(*tr.points[180])
    pts = tr.points
    sym = max(
        max(abs(pts[(360 - k) % 720][0] + pts[k][0]) + abs(pts[(360 - k) % 720][1] - pts[k][1]),
            abs(pts[(720 - k) % 720][0] - pts[k][0]) + abs(pts[(720 - k) % 720][1] + pts[k][1]))
        for k in range(720)
    )
    ok = worst < 1e-12 and abs(r0 - 1) < 1e-12 and abs(r90 - math.sqrt(qc.beta0)) < 1e-12 and sym < 1e-12
    return Criterion("9 trace fidelity", ok, f"max|P-1|={worst:.2e} r(0)={r0:.15g} r(pi/2)={r90:.15g} sym={sym:.1e}")


def run_all(seed: int = 20251015) -> list[Criterion]:
    rng = random.Random(seed)
    beta0 = solve_beta()
    qc = build_construction(beta0)
    return [
        _golden_g(),
        _root(beta0),
        _certificate(qc),
        _inconsistency(qc),
        _automorphism(rng),
        _nonexistence(qc, rng),
        _existence(qc),
        _real_defining_and_diagonal(rng),
        _trace(qc),
    ]
