"""Polynomial toolkit for L-special domains with algebraic boundaries.

Exact and floating-point complex polynomials in two variables, the change of
variables ``(x, y) <-> (z, z_beta)``, admissible-pair verification and
degree obstructions, the explicit quartic construction, and curve tracing.
"""

from .admissibility import (
    AdmissiblePairCandidate,
    ObstructionReport,
    diagonal_divides,
    is_diagonal,
    leading_obstruction,
    obstruction_search,
    real_defining,
    verify_pair,
)
from .gcd import bp_gcd_real
from .poly import BivarPoly, Space, UnivarPoly, bp_divide_exact, embed_univar, evaluate, homogeneous_part, re_im_split
from .quartic import (
    QuarticConstruction,
    alpha_of_beta,
    build_construction,
    c_pq,
    g_funcs,
    gamma_pq,
    solve_beta,
    verify_construction,
)
from .scalars import Scalar, ToleranceConfig, nullspace, rat_parse
from .substitution import BetaParam, pair_to_curve, sbeta_forward, sbeta_inverse
from .trace import CurveTrace, boundedness_check, emit, trace_level

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePairCandidate",
    "ObstructionReport",
    "diagonal_divides",
    "is_diagonal",
    "leading_obstruction",
    "obstruction_search",
    "real_defining",
    "verify_pair",
    "bp_gcd_real",
    "BivarPoly",
    "Space",
    "UnivarPoly",
    "bp_divide_exact",
    "embed_univar",
    "evaluate",
    "homogeneous_part",
    "re_im_split",
    "QuarticConstruction",
    "alpha_of_beta",
    "build_construction",
    "c_pq",
    "g_funcs",
    "gamma_pq",
    "solve_beta",
    "verify_construction",
    "Scalar",
    "ToleranceConfig",
    "nullspace",
    "rat_parse",
    "BetaParam",
    "pair_to_curve",
    "sbeta_forward",
    "sbeta_inverse",
    "CurveTrace",
    "boundedness_check",
    "emit",
    "trace_level",
]
