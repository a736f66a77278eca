"""Admissible pairs of polynomials for a curve, and the obstructions to them.

A pair ``(F1, F2)`` of univariate polynomials is admissible for a real
curve ``R(x, y) = 0`` when ``R`` divides the xy form of
``F1(z) - F2(z_beta)`` and neither polynomial is constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .errors import NotDiagonal, NotDivisible, ZeroPolynomial
from .gcd import bp_gcd_real
from .poly import (
    BivarPoly,
    Space,
    UnivarPoly,
    bp_divide_exact,
    bp_divmod,
    division_residual,
    poly_to_json,
    re_im_split,
    univar_to_json,
)
from .scalars import DEFAULT_TOL, Scalar, ToleranceConfig, nullspace
from .substitution import BetaParam, pair_to_curve, sbeta_forward, sbeta_inverse

__all__ = [
    "AdmissiblePairCandidate",
    "PairSolution",
    "VerifyResult",
    "ObstructionReport",
    "real_defining",
    "verify_pair",
    "obstruction_search",
    "leading_obstruction",
    "is_diagonal",
    "diagonal_divides",
    "pair_match",
]


@dataclass(frozen=True)
class AdmissiblePairCandidate:
    f1: UnivarPoly
    f2: UnivarPoly
    beta: BetaParam

    def to_json(self) -> dict:
        return {"f1": univar_to_json(self.f1), "f2": univar_to_json(self.f2)}


@dataclass(frozen=True)
class PairSolution(AdmissiblePairCandidate):
    """A pair recovered by :func:`obstruction_search` with its zw cofactor."""

    cofactor: BivarPoly = None

    @property
    def max_degree(self) -> int:
        return max(self.f1.degree, self.f2.degree)

    def to_json(self) -> dict:
        out = super().to_json()
        out["cofactor"] = poly_to_json(self.cofactor)
        out["max_degree"] = self.max_degree
        return out


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    cofactor: BivarPoly
    residual: float
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "cofactor": poly_to_json(self.cofactor),
            "residual": self.residual,
            "reason": self.reason,
        }


@dataclass
class ObstructionReport:
    curve_degree: int
    degree_bound: int
    total_nullity: int
    trivial_dim: int
    genuine_dim: int
    genuine_solutions: list[PairSolution] = field(default_factory=list)
    exists_admissible: bool = False
    exists_up_to_degree: bool = False

    def to_json(self) -> dict:
        return {
            "curve_degree": self.curve_degree,
            "degree_bound": self.degree_bound,
            "total_nullity": self.total_nullity,
            "trivial_dim": self.trivial_dim,
            "genuine_dim": self.genuine_dim,
            "exists_admissible": self.exists_admissible,
            "exists_up_to_degree": self.exists_up_to_degree,
            "genuine_solutions": [s.to_json() for s in self.genuine_solutions],
        }


def real_defining(p: BivarPoly) -> BivarPoly:
    """Primitive real polynomial cut out by both the real and imaginary parts of ``p``."""
    if p.is_zero():
        raise ZeroPolynomial("real_defining of the zero polynomial")
    if not p.is_exact:
        raise TypeError("real_defining needs an exact polynomial")
    p1, p2 = re_im_split(p)
    if p2.is_zero():
        return p1.primitive()
    if p1.is_zero():
        return p2.primitive()
    return bp_gcd_real(p1, p2)


def _match_backends(curve: BivarPoly, cand: AdmissiblePairCandidate):
    # explicit promotion: anything approximate forces the float backend
    f1, f2, beta = cand.f1, cand.f2, cand.beta
    if all(o.is_exact for o in (curve, f1, f2, beta)):
        return curve, f1, f2, beta
    return curve.to_approx(), f1.to_approx(), f2.to_approx(), beta.to_approx()


def verify_pair(cand: AdmissiblePairCandidate, curve: BivarPoly,
                tol: ToleranceConfig = DEFAULT_TOL) -> VerifyResult:
    """Check that ``curve`` divides S~(F1(z) - F2(z_beta)) and both F are non-constant.

    The returned cofactor ``l`` satisfies ``S~(F1 - F2) = l * curve`` (up to
    the reported relative residual on the float backend).
    """
    if curve.is_zero() or curve.space is not Space.XY or not curve.is_real():
        return VerifyResult(False, BivarPoly.zero(), float("inf"), "curve must be a nonzero real xy polynomial")
    curve, f1, f2, beta = _match_backends(curve, cand)
    zero = BivarPoly.zero(Space.XY, curve.is_exact)
    if f1.is_constant() or f2.is_constant():
        return VerifyResult(False, zero, float("inf"), "non-constancy violated")
    g = pair_to_curve(f1, f2, beta)
    q, r = bp_divmod(g, curve)
    residual = division_residual(g, r)
    if curve.is_exact:
        ok = r.is_zero()
    else:
        ok = residual <= tol.residual_tol
    reason = "" if ok else "curve does not divide the pair polynomial"
    return VerifyResult(ok, q, residual, reason)


def _zw_monomials(max_deg: int) -> list[tuple[int, int]]:
    return [(k - j, j) for k in range(max_deg + 1) for j in range(k + 1)]


def _is_nonzero(c: Scalar, cutoff: float) -> bool:
    return not c.is_zero() if c.is_exact else abs(c) > cutoff


def _unpack(v, d, cof_monos, exact, cutoff):
    def clean(c):
        return c if exact or abs(c) > cutoff else Scalar.zero(False)

    f1 = UnivarPoly([clean(c) for c in v[: d + 1]], exact=exact)
    f2 = UnivarPoly([clean(c) for c in v[d + 1: 2 * d + 2]], exact=exact)
    cof = BivarPoly({m: clean(c) for m, c in zip(cof_monos, v[2 * d + 2:])}, Space.ZW, exact)
    return f1, f2, cof


def obstruction_search(curve: BivarPoly, beta, d: int,
                       tol: ToleranceConfig = DEFAULT_TOL) -> ObstructionReport:
    """Solve F1(z) - F2(z_beta) = R'(z, z_beta) * S_beta(curve) with deg F1, F2 <= d.

    The cofactor ``R'`` is parametrized directly in zw space (total degree at
    most ``d - deg curve``).  The one-dimensional family F1 = F2 = constant,
    R' = 0 always solves the system; it is factored out by fixing the constant
    term of F1 to zero, which leaves exactly one representative per class.

    ``exists_admissible`` reports whether an admissible pair with
    ``max(deg F1, deg F2) == d`` exists; ``exists_up_to_degree`` relaxes this
    to ``<= d``.
    """
    beta = beta if isinstance(beta, BetaParam) else BetaParam(beta)
    if curve.is_zero() or not curve.is_real() or curve.space is not Space.XY:
        raise ValueError("obstruction_search needs a nonzero real xy curve")
    n = curve.degree
    if d < n:
        raise ValueError(f"degree bound {d} is below the curve degree {n}")
    if curve.is_exact and not beta.is_exact:
        curve = curve.to_approx()
    elif beta.is_exact and not curve.is_exact:
        beta = beta.to_approx()
    exact = curve.is_exact
    sc = sbeta_forward(curve, beta)

    cof_monos = _zw_monomials(d - n)
    eq_monos = _zw_monomials(d)
    row_of = {m: r for r, m in enumerate(eq_monos)}
    ncols = 2 * (d + 1) + len(cof_monos)
    zero, one = Scalar.zero(exact), Scalar.one(exact)
    rows = [[zero] * ncols for _ in eq_monos]
    for k in range(d + 1):
        rows[row_of[(k, 0)]][k] = one
        rows[row_of[(0, k)]][d + 1 + k] = rows[row_of[(0, k)]][d + 1 + k] - one
    for c_idx, (a, b) in enumerate(cof_monos, start=2 * (d + 1)):
        for (i, j), c in sc.items():
            r = row_of[(i + a, j + b)]
            rows[r][c_idx] = rows[r][c_idx] - c

    total = len(nullspace(rows, tol))
    # drop the F1 constant-term column: kills the trivial direction exactly
    reduced = [row[1:] for row in rows]
    basis = [[zero] + v for v in nullspace(reduced, tol)]

    report = ObstructionReport(
        curve_degree=n, degree_bound=d, total_nullity=total, trivial_dim=1, genuine_dim=len(basis)
    )
    if not basis:
        return report

    scale_of = [max(abs(c) for c in v) for v in basis]
    unpacked = [_unpack(v, d, cof_monos, exact, tol.rank_tol * s) for v, s in zip(basis, scale_of)]

    def qualifies(f1, f2, top=None):
        if f1.is_constant() or f2.is_constant():
            return False
        return top is None or max(f1.degree, f2.degree) == top

    solutions: list[PairSolution] = []
    for f1, f2, cof in unpacked:
        if qualifies(f1, f2):
            solutions.append(PairSolution(f1, f2, beta, cof))

    # over an infinite field a generic combination meets every condition that
    # some basis vector meets individually
    can_f1 = any(not f1.is_constant() for f1, _, _ in unpacked)
    can_f2 = any(not f2.is_constant() for _, f2, _ in unpacked)
    can_top = any(max(f1.degree, f2.degree) == d for f1, f2, _ in unpacked)
    report.exists_up_to_degree = can_f1 and can_f2
    report.exists_admissible = can_f1 and can_f2 and can_top

    if report.exists_up_to_degree and not any(qualifies(s.f1, s.f2, d if report.exists_admissible else None)
                                               for s in solutions):
        target = d if report.exists_admissible else None
        for base in count(2):
            weights = [Scalar.one(exact) * base ** k for k in range(len(basis))]
            v = [sum((w * vec[idx] / s for w, vec, s in zip(weights, basis, scale_of)), zero)
                 for idx in range(len(basis[0]))]
            f1, f2, cof = _unpack(v, d, cof_monos, exact, tol.rank_tol * max(abs(c) for c in v))
            if qualifies(f1, f2, target):
                solutions.append(PairSolution(f1, f2, beta, cof))
                break
            if base > 50:
                break
    report.genuine_solutions = solutions
    return report


def leading_obstruction(n: int, beta) -> int:
    """Real dimension of {(a, b) : S~(a z^n + b z_beta^n) is real at x^n, x^(n-1)y, xy^(n-1), y^n}."""
    if n < 2:
        raise ValueError("leading_obstruction needs n >= 2")
    beta = beta if isinstance(beta, BetaParam) else BetaParam(beta)
    exact = beta.is_exact
    one, i = Scalar.one(exact), Scalar(0, 1, exact=exact)
    monos = sorted({(n, 0), (n - 1, 1), (1, n - 1), (0, n)})
    columns = []
    for coeff, mono in ((one, (n, 0)), (i, (n, 0)), (one, (0, n)), (i, (0, n))):
        image = sbeta_inverse(BivarPoly({mono: coeff}, Space.ZW, exact), beta)
        columns.append([Scalar(image.coeff(*m).im, 0, exact=exact) for m in monos])
    matrix = [[col[r] for col in columns] for r in range(len(monos))]
    return len(nullspace(matrix))


def is_diagonal(p: BivarPoly) -> bool:
    if p.is_zero():
        return True
    n = p.degree
    return all(m in ((n, 0), (0, n)) for m, _ in p.items())


def diagonal_divides(p: BivarPoly, q: BivarPoly, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    for name, poly in (("dividend", p), ("divisor", q)):
        if poly.is_zero() or not is_diagonal(poly):
            raise NotDiagonal(f"{name} must be a nonzero diagonal polynomial")
    try:
        bp_divide_exact(p, q, tol)
    except NotDivisible:
        return False
    return True


def pair_match(found_f1: UnivarPoly, found_f2: UnivarPoly,
               known_f1: UnivarPoly, known_f2: UnivarPoly) -> tuple[Scalar, Scalar, float]:
    """Fit ``found = s * known + c`` (common s and c for both members).

    Returns ``(s, c, residual)`` where residual is the largest coefficient
    mismatch relative to the largest coefficient of the found pair.
    """
    if found_f1.is_exact != known_f1.is_exact:
        found_f1, found_f2 = found_f1.to_approx(), found_f2.to_approx()
        known_f1, known_f2 = known_f1.to_approx(), known_f2.to_approx()
    exact = found_f1.is_exact
    pairs = [(known_f1.coeff(k), found_f1.coeff(k)) for k in range(1, max(len(known_f1.coeffs), len(found_f1.coeffs)))]
    pairs += [(known_f2.coeff(k), found_f2.coeff(k)) for k in range(1, max(len(known_f2.coeffs), len(found_f2.coeffs)))]
    if not pairs:
        raise ValueError("pairs have no non-constant coefficients to match")
    pivot_known, pivot_found = max(pairs, key=lambda kf: abs(kf[0]))
    if pivot_known.is_zero():
        raise ValueError("known pair is constant")
    s = pivot_found / pivot_known
    c = found_f1.coeff(0) - s * known_f1.coeff(0)
    diffs = [abs(f - s * k) for k, f in pairs]
    diffs.append(abs(found_f2.coeff(0) - s * known_f2.coeff(0) - c))
    scale = max(max(abs(f) for _, f in pairs), abs(found_f1.coeff(0)), abs(found_f2.coeff(0)), 1e-300)
    residual = max(diffs) / scale
    if exact and residual == 0:
        residual = 0.0
    return s, c, residual
