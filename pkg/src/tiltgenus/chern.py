"""Numerical Chern characters on P^3.

Classes are written in the basis of powers of the plane class ``H`` with
``H^3 = 1``, so ``ch_i`` is the number ``H^{3-i} ch_i``.  ``ch2`` and ``ch3``
are stored scaled by 2 and 6 to keep :class:`ChernP3` integral.

The ideal sheaf of a curve of degree ``d`` with ``chi = chi(O_C)`` has class
``(1, 0, -d, 2d - chi)``; this is the value at ``beta = 0`` of the twisted
third component ``-beta^3/6 + d*beta + 2d - chi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadNum, as_quad


@dataclass(frozen=True)
class ChernP3:
    ch0: int
    ch1: int
    two_ch2: int
    six_ch3: int

    def __post_init__(self) -> None:
        for name in ("ch0", "ch1", "two_ch2", "six_ch3"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if (self.ch1 + self.two_ch2) % 2:
            raise ValueError(
                f"2*ch2 = {self.two_ch2} must have the parity of ch1 = {self.ch1}"
            )

    @classmethod
    def of(cls, ch0, ch1, ch2, ch3) -> ChernP3:
        """Build from unscaled values; ``ch2`` in (1/2)Z, ``ch3`` in (1/6)Z."""
        two_ch2 = 2 * Fraction(ch2)
        six_ch3 = 6 * Fraction(ch3)
        if two_ch2.denominator != 1 or six_ch3.denominator != 1:
            raise ValueError(f"non-integral class ({ch0}, {ch1}, {ch2}, {ch3})")
        return cls(int(ch0), int(ch1), int(two_ch2), int(six_ch3))

    @property
    def ch2(self) -> Fraction:
        return Fraction(self.two_ch2, 2)

    @property
    def ch3(self) -> Fraction:
        return Fraction(self.six_ch3, 6)

    def as_tuple(self) -> tuple[int, int, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2, self.ch3)

    def __add__(self, other: ChernP3) -> ChernP3:
        return ChernP3(
            self.ch0 + other.ch0,
            self.ch1 + other.ch1,
            self.two_ch2 + other.two_ch2,
            self.six_ch3 + other.six_ch3,
        )

    def __neg__(self) -> ChernP3:
        return ChernP3(-self.ch0, -self.ch1, -self.two_ch2, -self.six_ch3)

    def __sub__(self, other: ChernP3) -> ChernP3:
        return self + (-other)

    def __str__(self) -> str:
        return f"({self.ch0}, {self.ch1}, {self.ch2}, {self.ch3})"


@dataclass(frozen=True)
class TwistedChern:
    """Components of ``exp(-beta H) * ch`` over Q(sqrt(D))."""

    ch0: QuadNum
    ch1: QuadNum
    ch2: QuadNum
    ch3: QuadNum

    def as_tuple(self) -> tuple[QuadNum, QuadNum, QuadNum, QuadNum]:
        return (self.ch0, self.ch1, self.ch2, self.ch3)


def _twist_components(c0, c1, c2, c3, beta: QuadNum) -> TwistedChern:
    b2 = beta * beta
    b3 = b2 * beta
    return TwistedChern(
        as_quad(c0, beta.D),
        c1 - beta * c0,
        c2 - beta * c1 + b2 * c0 / 2,
        c3 - beta * c2 + b2 * c1 / 2 - b3 * c0 / 6,
    )


def twist(v: ChernP3 | TwistedChern, beta) -> TwistedChern:
    """The beta-twisted character ``ch^beta(v)``.

    A :class:`TwistedChern` may be twisted again; twists compose additively.
    """
    beta = as_quad(beta)
    if isinstance(v, TwistedChern):
        return _twist_components(*v.as_tuple(), beta)
    return _twist_components(
        as_quad(v.ch0, beta.D),
        as_quad(v.ch1, beta.D),
        as_quad(v.ch2, beta.D),
        as_quad(v.ch3, beta.D),
        beta,
    )


def compose_twists(v: ChernP3, beta1, beta2) -> TwistedChern:
    return twist(twist(v, beta1), beta2)


def tensor_line(v: ChernP3, m: int) -> ChernP3:
    """Class of ``E (x) O(m)``, i.e. ``ch(E) * exp(mH)``."""
    c0, c1, c2, c3 = v.ch0, v.ch1, v.ch2, v.ch3
    return ChernP3.of(
        c0,
        c1 + m * c0,
        c2 + m * c1 + Fraction(m * m, 2) * c0,
        c3 + m * c2 + Fraction(m * m, 2) * c1 + Fraction(m ** 3, 6) * c0,
    )


def line_bundle(m: int) -> ChernP3:
    """``ch(O(m)) = (1, m, m^2/2, m^3/6)``."""
    return ChernP3(1, m, m * m, m ** 3)


def ideal_sheaf_char(d: int, chi: int) -> ChernP3:
    """Class ``(1, 0, -d, 2d - chi)`` of the ideal sheaf of a degree ``d`` curve."""
    if d < 1:
        raise ValueError(f"curve degree must be positive, got {d}")
    return ChernP3(1, 0, -2 * d, 6 * (2 * d - chi))


def euler_char(v: ChernP3) -> Fraction:
    """Hirzebruch-Riemann-Roch on P^3: ``ch3 + 2 ch2 + 11/6 ch1 + ch0``."""
    return v.ch3 + 2 * v.ch2 + Fraction(11, 6) * v.ch1 + v.ch0
