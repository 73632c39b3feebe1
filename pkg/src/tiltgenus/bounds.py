"""Genus bound and speciality threshold for integral space curves.

Internally everything is written in ``chi = chi(O_C)``; ``p_a = 1 - chi``
appears only in reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .certify import REGIME_SMALL_K, CurveInput, critical_beta
from .chern import ideal_sheaf_char, line_bundle
from .exactnum import QuadNum, as_quad
from .tilt import TiltPoint, bmt_quadratic, compare_nu


@dataclass(frozen=True)
class BoundReport:
    d: int
    k: int
    regime: str
    beta_used: QuadNum
    raw_bound: QuadNum

    @property
    def integer_bound(self) -> int:
        return math.floor(self.raw_bound)

    @property
    def formula_id(self) -> str:
        return self.regime

    def as_dict(self) -> dict:
        return {
            "beta_used": str(self.beta_used),
            "d": self.d,
            "formula_id": self.formula_id,
            "integer_bound": self.integer_bound,
            "k": self.k,
            "raw_bound": str(self.raw_bound),
            "regime": self.regime,
        }


def genus_bound(d: int, k: int) -> BoundReport:
    """Upper bound for ``p_a(C)`` of an integral curve on no surface of degree ``< k``."""
    curve = CurveInput(d, k)
    if curve.regime == REGIME_SMALL_K:
        raw = QuadNum(Fraction(2 * d * d, 3 * k) + Fraction(d * (k - 6), 3) + 1, 0, d)
    else:
        raw = d * (QuadNum.sqrt_of(d) - 2) + 1
    return BoundReport(d, k, curve.regime, critical_beta(curve), raw)


def genus_bound_at(d: int, p: TiltPoint) -> QuadNum:
    """The ``p_a`` bound obtained if ``I_C`` is tilt-semistable at ``p``.

    ``(2d^2 + (alpha^2 + beta^2) d) / (3(-beta)) - 2d + 1``.
    """
    beta = p.beta
    if beta.sign() >= 0:
        raise ValueError("genus_bound_at needs beta < 0")
    return (2 * d * d + (p.alpha_sq + beta * beta) * d) / (-3 * beta) - 2 * d + 1


def bmt_expansion(d: int, chi: int, p: TiltPoint) -> QuadNum:
    """``2 alpha^2 d + 4 d^2 + 2 beta^2 d + 6 beta (2d - chi)``."""
    a2, b = p.alpha_sq, p.beta
    return 2 * a2 * d + 4 * d * d + 2 * b * b * d + 6 * b * (2 * d - chi)


def bmt_identity_check(d: int, chi: int, p: TiltPoint) -> bool:
    """Check the BMT form of ``I_C`` against its closed expansion.

    Also checks that its nonnegativity is the genus inequality at ``p``: the
    form equals ``6(-beta) * (genus_bound_at(d, p) - p_a)``.
    """
    if p.beta.sign() == 0:
        raise ValueError("beta = 0: cannot divide by 3(-beta)")
    form = bmt_quadratic(ideal_sheaf_char(d, chi), p)
    if form != bmt_expansion(d, chi, p):
        return False
    if p.beta.sign() > 0:
        return True
    slack = genus_bound_at(d, p) - (1 - chi)
    return form == -6 * p.beta * slack and (form.sign() >= 0) == (slack.sign() >= 0)


def speciality_threshold(d: int, k: int) -> QuadNum:
    """``h^1(O_C(l)) = 0`` for every integer ``l`` strictly above this value."""
    return -critical_beta(CurveInput(d, k)) - 4


@dataclass(frozen=True)
class SpecialityReport:
    d: int
    k: int
    m: int
    threshold: QuadNum
    beta0: QuadNum
    gap: QuadNum | None
    witness_alpha: QuadNum | None
    in_heart: bool
    note: str = ""

    @property
    def tested_l(self) -> int:
        return self.m - 4

    @property
    def conclusion(self) -> bool:
        return self.witness_alpha is not None

    def as_dict(self) -> dict:
        return {
            "beta0": str(self.beta0),
            "conclusion": self.conclusion,
            "d": self.d,
            "gap": None if self.gap is None else str(self.gap),
            "in_heart": self.in_heart,
            "k": self.k,
            "m": self.m,
            "note": self.note,
            "tested_l": self.tested_l,
            "threshold": str(self.threshold),
            "witness_alpha": None if self.witness_alpha is None else str(self.witness_alpha),
        }


def witness_inequality(d: int, m: int, beta0: QuadNum, alpha) -> QuadNum:
    """``alpha^2 + beta0^2 + (m + 2d/m) beta0 + 2d``; negative means the slope of
    ``O(-m)[1]`` lies below that of ``I_C``."""
    alpha = as_quad(alpha, d)
    return alpha * alpha + beta0 * beta0 + (m + Fraction(2 * d, m)) * beta0 + 2 * d


def _half_integer_below_root(gap: QuadNum, D: int) -> QuadNum:
    # largest h in (1/2)Z with h^2 < gap, i.e. largest n with n^2 < 4 gap;
    # dyadic fallback when gap <= 1/4
    n = math.isqrt(math.floor(4 * gap))
    if n * n == 4 * gap:
        n -= 1
    h = Fraction(n, 2)
    if h <= 0:
        h = Fraction(1, 4)
        while not (h * h < gap):
            h /= 2
    return QuadNum(h, 0, D)


def hom_vanishing_witness(d: int, k: int, m: int) -> SpecialityReport:
    """Exhibit ``alpha0 > 0`` with ``nu(O(-m)[1]) < nu(I_C)`` on ``beta = beta0``.

    Both objects are semistable there, so ``Hom(I_C, O(-m)[1]) = 0``, and by
    Serre duality ``h^2(I_C(m-4)) = h^1(O_C(m-4)) = 0``.  Applies for
    ``m > -beta0``; otherwise the report carries no witness.
    """
    curve = CurveInput(d, k)
    beta0 = critical_beta(curve)
    threshold = -beta0 - 4
    # ch1^{beta0}(O(-m)) = -m - beta0 < 0 puts O(-m)[1] in the heart
    in_heart = (-m - beta0).sign() < 0
    if not in_heart:
        return SpecialityReport(
            d, k, m, threshold, beta0, None, None, False,
            note=f"m = {m} is not above {-beta0}; the method does not apply",
        )
    gap = -((beta0 + m) * (beta0 + Fraction(2 * d, m)))
    if gap.sign() <= 0:
        return SpecialityReport(
            d, k, m, threshold, beta0, gap, None, True, note="no room for a witness"
        )
    alpha0 = _half_integer_below_root(gap, d)
    # independent check on the slopes themselves
    p = TiltPoint(alpha0, beta0)
    shifted_below = compare_nu(-line_bundle(-m), ideal_sheaf_char(d, 0), p) < 0
    if witness_inequality(d, m, beta0, alpha0).sign() >= 0 or not shifted_below:
        raise AssertionError(f"witness {alpha0} failed for (d, k, m) = ({d}, {k}, {m})")
    return SpecialityReport(d, k, m, threshold, beta0, gap, alpha0, True)
