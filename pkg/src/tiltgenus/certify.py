"""Semistability certificates for ``I_C`` along the critical line ``beta = beta0``.

For a curve of degree ``d`` on no surface of degree ``< k``:

* ``beta0 = -2d/k`` when ``k^2 < d``,
* ``beta0 = -2 sqrt(d)`` when ``k^2 >= d``.

On this line ``2 alpha^2 + beta0^2 >= 4d``, so a maximal destabilizing
subobject has rank one and is ``I_W(-l)`` with ``0 <= l < -beta0``.  Two
branches remain:

* ``C`` inside ``W``: ``ch2(I_W) <= -d``;
* ``C`` not inside ``W``: ``O(-l)`` maps into ``I_C``, forcing ``l >= k``,
  with ``ch2(I_W) <= 0``.

The wall expression is increasing in ``ch2(I_W)`` (coefficient ``-beta0``),
so the largest admissible value is the binding case, and the expression is
``margin - (l/2) alpha^2`` where ``margin`` is its value at ``alpha = 0``.
A margin ``<= 0`` therefore settles the case for every ``alpha > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .exactnum import QuadNum, as_quad
from .tilt import TiltPoint
from .walls import Candidate, ScoredCandidate, enumerate_destabilizers, wall_expression

REGIME_SMALL_K = "k^2<d"
REGIME_LARGE_K = "k^2>=d"

INSIDE = "C_in_W"
OUTSIDE = "C_not_in_W"


@dataclass(frozen=True)
class CurveInput:
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 1:
            raise ValueError(f"need d >= 1 and k >= 1, got d={self.d}, k={self.k}")

    @property
    def regime(self) -> str:
        return REGIME_SMALL_K if self.k * self.k < self.d else REGIME_LARGE_K


def critical_beta(curve: CurveInput) -> QuadNum:
    if curve.regime == REGIME_SMALL_K:
        return QuadNum(Fraction(-2 * curve.d, curve.k), 0, curve.d)
    return QuadNum(0, -2, curve.d)


@dataclass(frozen=True)
class CaseResult:
    l: int
    branch: str
    margin: QuadNum

    @property
    def verdict(self) -> str:
        s = self.margin.sign()
        if s < 0:
            return "below"
        if s == 0:
            return "contact"
        return "fail"

    @property
    def passed(self) -> bool:
        return self.margin.sign() <= 0

    def as_dict(self) -> dict:
        return {
            "branch": self.branch,
            "l": self.l,
            "margin": str(self.margin),
            "verdict": self.verdict,
        }


@dataclass
class CertReport:
    curve: CurveInput
    beta0: QuadNum
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def regime(self) -> str:
        return self.curve.regime

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def vacuous_branches(self) -> list[str]:
        present = {c.branch for c in self.cases}
        return [b for b in (INSIDE, OUTSIDE) if b not in present]

    def as_dict(self) -> dict:
        return {
            "beta0": str(self.beta0),
            "cases": [c.as_dict() for c in self.cases],
            "d": self.curve.d,
            "k": self.curve.k,
            "overall": self.overall,
            "regime": self.regime,
            "vacuous_branches": self.vacuous_branches(),
        }


def twist_range(beta0: QuadNum, start: int) -> range:
    """Integers ``l`` with ``start <= l < -beta0``."""
    return range(start, max(start, math.ceil(-beta0)))


def certify_at_beta(curve: CurveInput, beta0) -> CertReport:
    """Run the rank-one case split at an arbitrary ``beta0 < 0``.

    The split is only a proof of semistability when ``beta0^2 >= 4d``;
    :func:`certify_semistable_line` uses the critical value.
    """
    beta0 = as_quad(beta0, curve.d)
    if beta0.sign() >= 0:
        raise ValueError("beta0 must be negative")
    d, k = curve.d, curve.k
    edge = TiltPoint(0, beta0)
    report = CertReport(curve, beta0)
    for l in twist_range(beta0, 0):
        # I_W(-l) with ch2(I_W) = -d
        cand = Candidate.of(1, -l, Fraction(l * l, 2) - d)
        report.cases.append(CaseResult(l, INSIDE, wall_expression(cand, d, edge)))
    for l in twist_range(beta0, max(k, 1)):
        # I_W(-l) with ch2(I_W) = 0, e.g. O(-l) itself
        cand = Candidate.of(1, -l, Fraction(l * l, 2))
        report.cases.append(CaseResult(l, OUTSIDE, wall_expression(cand, d, edge)))
    report.cases.sort(key=lambda c: (c.l, c.branch))
    return report


def certify_semistable_line(curve: CurveInput) -> CertReport:
    return certify_at_beta(curve, critical_beta(curve))


def outside_factor(curve: CurveInput, l: int) -> QuadNum:
    """``(beta0 + l)(beta0 + 2d/l)``; the outside-branch margin is ``-l/2`` times it."""
    beta0 = critical_beta(curve)
    return (beta0 + l) * (beta0 + Fraction(2 * curve.d, l))


@dataclass
class OracleReport:
    curve: CurveInput
    beta0: QuadNum
    rank_cap: int
    violations: list[tuple[QuadNum, ScoredCandidate]] = field(default_factory=list)
    contacts: list[tuple[QuadNum, ScoredCandidate]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        def row(alpha, s):
            c = s.candidate
            return {
                "alpha": str(alpha),
                "r": c.r,
                "theta": c.theta,
                "two_c": c.two_c,
                "expression": str(s.expression),
            }

        return {
            "beta0": str(self.beta0),
            "contacts": [row(a, s) for a, s in self.contacts],
            "d": self.curve.d,
            "k": self.curve.k,
            "ok": self.ok,
            "rank_cap": self.rank_cap,
            "violations": [row(a, s) for a, s in self.violations],
        }


def oracle_crosscheck(
    curve: CurveInput,
    alphas: Iterable,
    rank_cap: int,
    *,
    beta=None,
    workers: int = 1,
) -> OracleReport:
    """Brute-force search for destabilizers at ``(alpha, beta0)`` for each alpha.

    ``beta`` replaces the critical value, for probing other vertical lines.
    """
    beta0 = critical_beta(curve) if beta is None else as_quad(beta, curve.d)
    report = OracleReport(curve, beta0, rank_cap)
    for alpha in alphas:
        alpha = as_quad(alpha, curve.d)
        if alpha.sign() <= 0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        found = enumerate_destabilizers(
            curve.d, TiltPoint(alpha, beta0), rank_cap, k=curve.k, workers=workers
        )
        for s in found:
            (report.violations if s.destabilizes else report.contacts).append((alpha, s))
    return report
