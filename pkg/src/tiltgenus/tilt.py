"""Slope functions and Bogomolov-Gieseker type quantities on P^3.

Only numerical quantities are computed here.  Whether an object actually
lies in the tilted heart, or is tilt-semistable, is never decided by this
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .chern import ChernP3, TwistedChern, twist
from .exactnum import QuadNum, as_quad


@dataclass(frozen=True)
class TiltPoint:
    alpha: QuadNum
    beta: QuadNum

    def __init__(self, alpha, beta) -> None:
        alpha = as_quad(alpha)
        beta = as_quad(beta)
        if alpha.sign() < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def alpha_sq(self) -> QuadNum:
        return self.alpha * self.alpha

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, beta={self.beta})"


@total_ordering
class ExtSlope:
    """A slope value in Q(sqrt(D)) extended by ``+inf``."""

    __slots__ = ("value",)

    def __init__(self, value: QuadNum | None) -> None:
        self.value = value

    @classmethod
    def infinite(cls) -> ExtSlope:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _other(self, other) -> ExtSlope:
        return other if isinstance(other, ExtSlope) else ExtSlope(as_quad(other))

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if self.is_infinite or o.is_infinite:
            return self.is_infinite and o.is_infinite
        return self.value == o.value

    def __lt__(self, other) -> bool:
        o = self._other(other)
        if self.is_infinite:
            return False
        if o.is_infinite:
            return True
        return self.value < o.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return "ExtSlope(+inf)" if self.is_infinite else f"ExtSlope({self.value})"

    def __str__(self) -> str:
        return "+inf" if self.is_infinite else str(self.value)


def mu_slope(v: ChernP3, beta) -> ExtSlope:
    if v.ch0 == 0:
        return ExtSlope.infinite()
    tc = twist(v, beta)
    return ExtSlope(tc.ch1 / v.ch0)


def nu_parts(v: ChernP3, p: TiltPoint) -> tuple[QuadNum, QuadNum]:
    """Numerator and denominator of the tilt slope at ``p``."""
    tc = twist(v, p.beta)
    return tc.ch2 - p.alpha_sq * tc.ch0 / 2, tc.ch1


def nu_slope(v: ChernP3, p: TiltPoint) -> ExtSlope:
    num, den = nu_parts(v, p)
    if not den:
        return ExtSlope.infinite()
    return ExtSlope(num / den)


def compare_fractions(num1, den1, num2, den2) -> int:
    """Sign of ``num1/den1 - num2/den2``, by cross-multiplication.

    A zero denominator stands for ``+inf``.
    """
    z1, z2 = den1.sign() == 0, den2.sign() == 0
    if z1 or z2:
        return int(z1) - int(z2)
    cross = (num1 * den2 - num2 * den1).sign()
    return cross * den1.sign() * den2.sign()


def compare_nu(v: ChernP3, w: ChernP3, p: TiltPoint) -> int:
    """Sign of ``nu(v) - nu(w)`` at ``p``, with +inf handled."""
    return compare_fractions(*nu_parts(v, p), *nu_parts(w, p))


def discriminant(v: ChernP3 | TwistedChern):
    """Generalized discriminant ``ch1^2 - 2 ch0 ch2``.

    Returns a Fraction for an untwisted class, a QuadNum for a twisted one;
    the two agree for every twist.
    """
    if isinstance(v, TwistedChern):
        return v.ch1 * v.ch1 - 2 * v.ch0 * v.ch2
    return Fraction(v.ch1 * v.ch1) - 2 * v.ch0 * v.ch2


def bmt_quadratic(v: ChernP3, p: TiltPoint) -> QuadNum:
    """``alpha^2 * disc + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta``.

    Nonnegative on tilt-semistable objects of P^3 (Macri's theorem).
    """
    tc = twist(v, p.beta)
    return (
        p.alpha_sq * discriminant(v)
        + 4 * tc.ch2 * tc.ch2
        - 6 * tc.ch1 * tc.ch3
    )


def classical_bg_ok(v: ChernP3) -> bool:
    """Necessary condition ``disc >= 0`` for tilt-semistability."""
    return discriminant(v) >= 0
