import cmath
import math
from dataclasses import replace

import pytest

from lspecial.errors import BetaOutOfRange, NoSignChange, VerificationFailed
from lspecial.quartic import (
    F_INDEX,
    PRINTED_X2Y2,
    PRINTED_Y4,
    PHI,
    alpha_of_beta,
    build_construction,
    c_pq,
    check_construction,
    construction_report,
    g_funcs,
    gamma_pq,
    h_of_beta,
    printed_reference_curve,
    solve_beta,
    verify_construction,
)
from lspecial.scalars import Scalar

# 40-digit mpmath oracle that solves gamma_00 = e^{i phi} gamma_01 directly on the
# circle alpha^2 + alpha*^2 = 1/beta, independent of the closed-form ratio
ORACLE_BETA0 = 0.0394057578502666815
ORACLE_ALPHA = {0.01: (8.0337293866381309, 5.954762139856379), 0.1: (2.3645633665520853, 2.0997238117333119)}
ORACLE_G = {
    0.01: (complex(7.0979926736746775, 7.044040034274408), complex(8.8926805377549585, 4.5738641052652824)),
    0.1: (complex(2.8354294838010083, 1.400121295599759), complex(2.20779037863006, 2.2639924125377577)),
}
ORACLE_AT_ROOT = {
    "alpha": 3.9602840598617994,
    "alpha_star": 3.1133827699711154,
    "inv_beta_sq": 643.99223594621796,
    "x2y2": -11.981395124884882,
    "alpha_sub_x2y2": 34.912867974849745,
    "gamma": -0.19850883569822952,
    "C": 1.1981395124884882,
}


@pytest.mark.parametrize("beta", sorted(ORACLE_ALPHA))
def test_alpha_matches_oracle(beta):
    a, s = alpha_of_beta(beta)
    assert a == pytest.approx(ORACLE_ALPHA[beta][0], rel=1e-13)
    assert s == pytest.approx(ORACLE_ALPHA[beta][1], rel=1e-13)
    assert a * a + s * s == pytest.approx(1 / beta, rel=1e-14)


@pytest.mark.parametrize("beta", sorted(ORACLE_G))
def test_g_matches_oracle(beta):
    for got, want in zip(g_funcs(beta), ORACLE_G[beta]):
        assert abs(got.to_complex() - want) < 1e-12


def test_golden_real_parts():
    want = {0.01: (7.09, 8.89), 0.1: (2.83, 2.21)}
    for beta, (w1, w2) in want.items():
        g1, g2 = g_funcs(beta)
        assert abs(g1.re - w1) <= 0.01 and abs(g2.re - w2) <= 0.01


def test_h_values():
    assert h_of_beta(0.01) == pytest.approx(-1.7946879, abs=1e-7)
    assert h_of_beta(0.1) == pytest.approx(0.62763911, abs=1e-7)
    assert h_of_beta(0.2) > 0 and h_of_beta(0.3) > 0


def test_solve_beta_matches_oracle(beta0):
    assert abs(beta0 - ORACLE_BETA0) < 1e-12
    assert abs(h_of_beta(beta0)) < 1e-12
    g1, g2 = g_funcs(beta0)
    assert g1.im > 0 and g2.im > 0


def test_solve_beta_errors():
    with pytest.raises(NoSignChange):
        solve_beta(0.2, 0.3)
    with pytest.raises(ValueError):
        solve_beta(0.1, 0.01)
    with pytest.raises(BetaOutOfRange):
        solve_beta(0.0, 0.1)


@pytest.mark.parametrize("beta", [0.01, 0.0394, 0.1, 0.5])
def test_gamma_invariants(beta):
    a, s = alpha_of_beta(beta)
    g = {pq: gamma_pq(a, s, beta, *pq).to_complex() for pq in F_INDEX}
    for value in g.values():
        assert abs(value) == pytest.approx(math.sqrt(beta), rel=1e-13)
    assert g[(1, 0)] == pytest.approx(g[(0, 0)].conjugate(), abs=1e-15)
    assert g[(0, 1)] == pytest.approx(g[(1, 1)].conjugate(), abs=1e-15)
    # the closed-form ratio aligns the pairs (00, 01) and (11, 10) for every beta
    assert g[(0, 0)] == pytest.approx(cmath.exp(1j * PHI) * g[(0, 1)], abs=1e-14)
    assert g[(1, 1)] == pytest.approx(cmath.exp(1j * PHI) * g[(1, 0)], abs=1e-14)


def test_c_pq_degenerate():
    assert c_pq(0.0, 0.0, 0.25, 0, 1) == Scalar.approx(1 / 0.75)
    assert gamma_pq(0.0, 0.0, 0.25, 1, 1) == Scalar.approx(0.25)


def test_construction_values(construction):
    qc = construction
    assert qc.alpha == pytest.approx(ORACLE_AT_ROOT["alpha"], rel=1e-12)
    assert qc.alpha_star == pytest.approx(ORACLE_AT_ROOT["alpha_star"], rel=1e-12)
    assert 1 / qc.beta0 ** 2 == pytest.approx(ORACLE_AT_ROOT["inv_beta_sq"], rel=1e-12)
    assert qc.x2y2_coefficient == pytest.approx(ORACLE_AT_ROOT["x2y2"], rel=1e-11)
    assert abs(qc.gamma.to_complex() - ORACLE_AT_ROOT["gamma"]) < 1e-12
    assert abs(qc.C.to_complex() - ORACLE_AT_ROOT["C"]) < 1e-11
    assert qc.f1.degree == 5 and qc.f2.degree == 5


def test_construction_residuals(construction):
    res = verify_construction(construction)
    assert set(res) == {"gamma_align", "factor_ids", "full_identity", "modulus", "boundary"}
    assert max(res.values()) < 1e-9


def test_perturbed_beta_breaks_alignment(beta0):
    res = check_construction(build_construction(beta0 + 1e-3))
    assert res["gamma_align"] > 1e-9
    with pytest.raises(VerificationFailed) as info:
        verify_construction(build_construction(beta0 + 1e-3))
    assert info.value.check == "gamma_align"


def test_rotated_gamma_fails(construction):
    bad = replace(construction, gamma=construction.gamma * Scalar.approx(cmath.exp(1j * PHI)))
    res = check_construction(bad)
    assert res["gamma_align"] > 1e-3
    assert res["modulus"] < 1e-12


def test_report_fields(construction):
    rep = construction_report(construction)
    assert rep["printed_x2y2_coefficient"] == PRINTED_X2Y2 and rep["printed_y4_coefficient"] == PRINTED_Y4
    assert rep["x2y2_coefficient"] == pytest.approx(ORACLE_AT_ROOT["x2y2"], rel=1e-11)
    assert rep["alpha_for_alpha_squared_x2y2"] == pytest.approx(ORACLE_AT_ROOT["alpha_sub_x2y2"], rel=1e-11)
    assert round(rep["alpha_for_alpha_squared_x2y2"], 3) == PRINTED_X2Y2
    assert round(rep["y4_coefficient"], 3) == PRINTED_Y4
    assert rep["bounded"] is True
    assert any("alpha in place of alpha^2" in note for note in rep["notes"])
    assert rep["level"] == 1.0


def test_printed_reference_curve():
    p = printed_reference_curve()
    assert p.is_homogeneous() and p.degree == 4
    assert p.coeff(2, 2) == Scalar.approx(PRINTED_X2Y2)
