"""Numerical walls for ideal sheaves of space curves.

A candidate subobject ``E`` of ``I_C`` in the tilted heart has invariants
``(r, theta, c) = (ch0, ch1, ch2)``.  At ``(alpha, beta)`` with ``beta <= 0``
and ``r*beta < theta <= (r-1)*beta``,

    nu(E) - nu(I_C)  has the sign of
    theta/2 (alpha^2 + beta^2) - (c + r d) beta + theta d,

whose zero locus is a semicircle centred on the beta-axis.  All such
semicircles for fixed ``d`` are nested and pairwise disjoint.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chern import ChernP3, ideal_sheaf_char
from .exactnum import QuadNum, Surd, as_quad
from .tilt import TiltPoint, compare_nu, nu_parts


class DegenerateWallError(ValueError):
    """Raised for ``theta == 0``: the equality locus is the line ``beta = 0``."""


@dataclass(frozen=True, order=True)
class Candidate:
    r: int
    theta: int
    two_c: int

    def __post_init__(self) -> None:
        if (self.theta + self.two_c) % 2:
            raise ValueError(f"theta + 2c must be even, got {self}")

    @classmethod
    def of(cls, r: int, theta: int, c) -> Candidate:
        two_c = 2 * Fraction(c)
        if two_c.denominator != 1:
            raise ValueError(f"c must be a half-integer, got {c}")
        return cls(r, theta, int(two_c))

    @property
    def c(self) -> Fraction:
        return Fraction(self.two_c, 2)

    def as_chern(self) -> ChernP3:
        # ch3 never enters a tilt slope
        return ChernP3(self.r, self.theta, self.two_c, 0)

    def in_heart(self, beta) -> bool:
        """``0 < ch1^beta(E) <= ch1^beta(I_C)``, i.e. ``r beta < theta <= (r-1) beta``."""
        beta = as_quad(beta)
        return self.r * beta < self.theta and self.theta <= (self.r - 1) * beta

    def satisfies_bg(self) -> bool:
        return self.theta * self.theta - self.r * self.two_c >= 0

    def __str__(self) -> str:
        return f"({self.r}, {self.theta}, {self.c})"


@dataclass(frozen=True)
class WallCircle:
    """The semicircle ``(beta - center_x)^2 + alpha^2 = radius_sq``, alpha > 0."""

    center_x: QuadNum
    radius_sq: QuadNum

    @property
    def endpoints(self) -> tuple[float, float]:
        # display only
        r = math.sqrt(float(self.radius_sq))
        x = float(self.center_x)
        return (x - r, x + r)

    def alpha_sq_at(self, beta) -> QuadNum:
        diff = as_quad(beta) - self.center_x
        return self.radius_sq - diff * diff


def wall_expression(cand: Candidate, d: int, p: TiltPoint) -> QuadNum:
    """``theta/2 (alpha^2 + beta^2) - (c + r d) beta + theta d`` at ``p``.

    Under the heart constraint, the sign is that of ``nu(E) - nu(I_C)``.
    """
    a2, b = p.alpha_sq, p.beta
    return Fraction(cand.theta, 2) * (a2 + b * b) - (cand.c + cand.r * d) * b + cand.theta * d


def wall_of(cand: Candidate, d: int) -> WallCircle | None:
    """The numerical wall of ``cand`` against ``I_C``; None if it is empty."""
    if cand.theta == 0:
        raise DegenerateWallError(f"theta = 0 for {cand}: locus is beta = 0")
    center = Fraction(cand.c + cand.r * d) / cand.theta
    radius_sq = center * center - 2 * d
    if radius_sq < 0:
        return None
    return WallCircle(as_quad(center), as_quad(radius_sq))


def wall_elimination(w1: WallCircle, w2: WallCircle) -> tuple[QuadNum, QuadNum] | None:
    """Solve the two circle equations by subtracting them.

    Returns the forced ``(beta, alpha^2)``; a common point with ``alpha > 0``
    exists only if ``alpha^2 > 0``.  None when the centers coincide.
    """
    # (beta - x)^2 + alpha^2 = R  <=>  alpha^2 + beta^2 - 2 x beta + (x^2 - R) = 0
    x1, x2 = w1.center_x, w2.center_x
    if x1 == x2:
        return None
    k1 = x1 * x1 - w1.radius_sq
    k2 = x2 * x2 - w2.radius_sq
    beta = (k1 - k2) / (2 * (x1 - x2))
    alpha_sq = w1.alpha_sq_at(beta)
    return beta, alpha_sq


def rank_bound(p: TiltPoint, d: int) -> Surd:
    """Upper bound on the rank of a destabilizing subobject of ``I_C`` at ``p``.

    Any semistable subobject ``E`` with ``nu(E) > nu(I_C)`` has
    ``ch0(E)`` strictly below the returned value; it equals 2 on the conic
    ``2 alpha^2 + beta^2 = 4d`` and is smaller outside it.
    """
    a2 = p.alpha_sq
    if a2.sign() <= 0:
        raise ValueError("rank_bound needs alpha > 0")
    b2 = p.beta * p.beta
    inner = b2 - a2 - 2 * d
    radicand = inner * inner + 4 * a2 * b2
    return Surd((a2 - b2 + 2 * d) / (2 * a2), 1 / (2 * a2), radicand)


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: Candidate
    expression: QuadNum
    # sign of nu(candidate) - nu(I_C), computed directly from the slopes
    comparison: int

    @property
    def on_wall(self) -> bool:
        return self.comparison == 0

    @property
    def destabilizes(self) -> bool:
        return self.comparison > 0


def _ceil(x: QuadNum) -> int:
    return math.ceil(x)


def _floor(x) -> int:
    return math.floor(x)


def _c_lower_bound(r: int, theta: int, d: int, p: TiltPoint) -> QuadNum:
    # smallest c with nu(E) >= nu(I_C), solved from the slopes directly
    n_i, den_i = nu_parts(ideal_sheaf_char(d, 0), p)
    den_e = theta - r * p.beta
    b2_minus_a2 = p.beta * p.beta - p.alpha_sq
    return n_i * den_e / den_i - Fraction(r, 2) * b2_minus_a2 + p.beta * theta


def _admissible_rank_one(cand: Candidate, k: int | None, d: int) -> bool:
    # E = I_W(-l) with l = -theta and e = ch2(I_W): either C lies in W (e <= -d)
    # or O(-l) maps into I_C, which needs a surface of degree l through C
    if k is None:
        return True
    l = -cand.theta
    e = cand.c - Fraction(l * l, 2)
    return e <= -d or l >= k


def _scan_rank(
    r: int,
    d: int,
    p: TiltPoint,
    k: int | None,
    max_two_c: int | None,
) -> list[ScoredCandidate]:
    beta = p.beta
    ideal = ideal_sheaf_char(d, 0)
    theta_lo = _floor(r * beta) + 1
    theta_hi = _floor((r - 1) * beta)
    out: list[ScoredCandidate] = []
    for theta in range(theta_lo, theta_hi + 1):
        lo = _ceil(2 * _c_lower_bound(r, theta, d, p))
        if r > 0:
            hi = _floor(Fraction(theta * theta, r))
        else:
            hi = max_two_c
            if r < 0:
                lo = max(lo, _ceil(Fraction(theta * theta, r)))
        if (theta + lo) % 2:
            lo += 1
        for two_c in range(lo, hi + 1, 2):
            cand = Candidate(r, theta, two_c)
            if r == 1 and not _admissible_rank_one(cand, k, d):
                continue
            cmp = compare_nu(cand.as_chern(), ideal, p)
            if cmp < 0:
                continue
            out.append(ScoredCandidate(cand, wall_expression(cand, d, p), cmp))
    return out


def enumerate_destabilizers(
    d: int,
    p: TiltPoint,
    rank_cap: int,
    *,
    k: int | None = None,
    nonpositive_ranks: bool = False,
    max_two_c: int | None = None,
    workers: int = 1,
) -> list[ScoredCandidate]:
    """All numerical classes of rank ``1..rank_cap`` with ``nu >= nu(I_C)`` at ``p``.

    Candidates satisfy the heart window ``r beta < theta <= (r-1) beta``, the
    integrality ``theta + 2c`` even and the classical BG cut
    ``theta^2 - 2 r c >= 0``.  With ``k`` given, rank-one classes ``I_W(-l)``
    with ``W`` not containing ``C`` are kept only for ``l >= k`` (``C`` lies
    on no surface of degree ``< k``).

    ``nonpositive_ranks`` additionally scans ranks ``-rank_cap..0``; those
    windows are unbounded in ``c`` and need ``max_two_c``.  That search goes
    beyond the rank-one reduction and is exploratory only.

    Results are sorted by ``(r, theta, 2c)``.  Each carries ``comparison``:
    +1 for a strict destabilizer, 0 for a wall contact.
    """
    if p.beta.sign() >= 0:
        raise ValueError("enumeration needs beta < 0")
    if p.alpha.sign() <= 0:
        raise ValueError("enumeration needs alpha > 0")
    if rank_cap < 1:
        raise ValueError("rank_cap must be positive")
    ranks = list(range(1, rank_cap + 1))
    if nonpositive_ranks:
        if max_two_c is None:
            raise ValueError("nonpositive ranks need max_two_c")
        ranks = list(range(-rank_cap, 1)) + ranks
    args = [(r, d, p, k, max_two_c) for r in ranks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_rank, *zip(*args)))
    else:
        chunks = [_scan_rank(*a) for a in args]
    return sorted((s for chunk in chunks for s in chunk), key=lambda s: s.candidate)


def strict_destabilizers(scored: Iterable[ScoredCandidate]) -> list[ScoredCandidate]:
    return [s for s in scored if s.destabilizes]


def wall_family(
    d: int, rank_cap: int, thetas: Iterable[int]
) -> list[tuple[Candidate, WallCircle]]:
    """Nonempty walls on the ``beta < 0`` side for ranks ``1..rank_cap``.

    For each negative ``theta``, ``c`` runs from the smallest value giving a
    real wall, ``c + r d >= sqrt(2d) |theta|``, up to the BG bound
    ``theta^2 / (2r)``.
    """
    out = []
    for r in range(1, rank_cap + 1):
        for theta in sorted(set(thetas)):
            if theta >= 0:
                continue
            lo = math.ceil(2 * QuadNum(-r * d, -theta, 2 * d))
            hi = (theta * theta) // r
            if (theta + lo) % 2:
                lo += 1
            for two_c in range(lo, hi + 1, 2):
                cand = Candidate(r, theta, two_c)
                wall = wall_of(cand, d)
                if wall is not None and wall.center_x.sign() < 0:
                    out.append((cand, wall))
    return out
