"""Exact arithmetic in Q and Q(sqrt(D)).

Every slope, wall and bound in this package is compared exactly. Values of
the form ``a + b*sqrt(D)`` with rational ``a, b`` are held by :class:`QuadNum`;
nested radicals ``a + b*sqrt(s)`` with ``a, b, s`` in Q(sqrt(D)) (needed for
the rank bound) are held by :class:`Surd`, which supports exact comparison
only.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction, "QuadNum"]


def _square_root_of_int(n: int) -> int | None:
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Return the nonnegative rational square root of ``q``, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    num = _square_root_of_int(q.numerator)
    den = _square_root_of_int(q.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _sign_of_sum(a, b, t, sign) -> int:
    # sign of a + b*sqrt(t), t >= 0, using only exact sign tests on a, b, a^2 - b^2 t
    sb = sign(b)
    if sb == 0 or sign(t) == 0:
        return sign(a)
    sa = sign(a)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    gap = sign(a * a - b * b * t)
    if gap > 0:
        return sa
    if gap < 0:
        return sb
    return 0


@total_ordering
class QuadNum:
    """An element ``a + b*sqrt(D)`` of Q(sqrt(D)) in canonical form.

    When ``D`` is a perfect square the irrational part is folded into ``a``,
    so ``b == 0`` exactly when the value is rational.  Arithmetic between two
    irrational values requires a common radicand; a rational value (``b == 0``)
    combines with any radicand.
    """

    __slots__ = ("_a", "_b", "_D")

    def __init__(self, a=0, b=0, D: int = 0) -> None:
        if isinstance(D, bool) or not isinstance(D, int):
            raise TypeError(f"radicand must be an int, got {D!r}")
        if D < 0:
            raise ValueError(f"radicand must be non-negative, got {D}")
        a = Fraction(a)
        b = Fraction(b)
        root = _square_root_of_int(D)
        if root is not None:
            a, b = a + b * root, Fraction(0)
        self._a = a
        self._b = b
        self._D = D

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int:
        return self._D

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    # -- coercion ---------------------------------------------------------

    @classmethod
    def sqrt_of(cls, D: int) -> QuadNum:
        """The element ``sqrt(D)``."""
        return cls(0, 1, D)

    def _coerce(self, other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, bool):
            return QuadNum(Fraction(other), 0, self._D)
        return None

    def _common_radicand(self, other: QuadNum) -> int:
        if self._D == other._D or other._b == 0:
            return self._D
        if self._b == 0:
            return other._D
        raise ValueError(
            f"cannot combine sqrt({self._D}) and sqrt({other._D}) terms"
        )

    # -- field operations -------------------------------------------------

    def __add__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._common_radicand(o)
        return QuadNum(self._a + o._a, self._b + o._b, D)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self._a, -self._b, self._D)

    def __pos__(self) -> QuadNum:
        return self

    def __sub__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._common_radicand(o)
        a = self._a * o._a + self._b * o._b * D
        b = self._a * o._b + o._a * self._b
        return QuadNum(a, b, D)

    __rmul__ = __mul__

    def conjugate(self) -> QuadNum:
        return QuadNum(self._a, -self._b, self._D)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - b^2 D``."""
        return self._a * self._a - self._b * self._b * self._D

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            # norm vanishes only at zero once perfect squares are folded
            raise ZeroDivisionError("division by zero in Q(sqrt(D))")
        return QuadNum(self._a / n, -self._b / n, self._D)

    def __truediv__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._common_radicand(o)
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> QuadNum:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadNum(1, 0, self._D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        return _sign_of_sum(self._a, self._b, self._D, _sign)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._b == 0 and o._b == 0:
            return self._a == o._a
        return self._a == o._a and self._b == o._b and self._D == o._D

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._D))

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __abs__(self) -> QuadNum:
        return -self if self.sign() < 0 else self

    def __floor__(self) -> int:
        if self._b == 0:
            return math.floor(self._a)
        # b*sqrt(D) = +-sqrt(b^2 D); isqrt brackets it to within one
        t = self._b * self._b * self._D
        root = math.isqrt(t.numerator // t.denominator)
        if self._b < 0:
            root = -root
        n = math.floor(self._a) + root
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._D)

    def sqrt(self) -> QuadNum:
        """Nonnegative square root inside Q(sqrt(D)).

        Raises ValueError if the value is negative or not a square in the
        field.
        """
        s = self.sign()
        if s < 0:
            raise ValueError(f"{self} is negative")
        if s == 0:
            return QuadNum(0, 0, self._D)
        D = self._D
        if self._b == 0:
            r = rational_sqrt(self._a)
            if r is not None:
                return QuadNum(r, 0, D)
            if D:
                v = rational_sqrt(self._a / D)
                if v is not None:
                    return QuadNum(0, v, D)
            raise ValueError(f"{self} is not a square in Q(sqrt({D}))")
        # (u + v sqrt D)^2 = a + b sqrt D  =>  u^2 = (a +- sqrt(norm)) / 2
        n = rational_sqrt(self.norm())
        if n is not None:
            for cand in ((self._a + n) / 2, (self._a - n) / 2):
                u = rational_sqrt(cand)
                if u:
                    root = QuadNum(u, self._b / (2 * u), D)
                    return root if root.sign() >= 0 else -root
        raise ValueError(f"{self} is not a square in Q(sqrt({D}))")

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QuadNum({self._a}, {self._b}, D={self._D})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        mag = abs(self._b)
        coeff = "" if mag == 1 else f"{mag}*"
        irr = f"{coeff}sqrt({self._D})"
        if self._a == 0:
            return irr if self._b > 0 else f"-{irr}"
        op = "+" if self._b > 0 else "-"
        return f"{self._a}{op}{irr}"


def make_quad(a=0, b=0, D: int = 0) -> QuadNum:
    return QuadNum(a, b, D)


def sign(x) -> int:
    """Exact sign of an int, Fraction, QuadNum or Surd."""
    if isinstance(x, (QuadNum, Surd)):
        return x.sign()
    return _sign(x)


def as_quad(x, D: int = 0) -> QuadNum:
    if isinstance(x, QuadNum):
        return x
    return QuadNum(Fraction(x), 0, D)


_QUAD_RE = re.compile(
    r"""^\s*
    (?:(?P<a>[+-]?\d+(?:/\d+)?)(?=\s*(?:[+-]|$)))?
    \s*
    (?:(?P<bsign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<D>\d+)\s*\))?
    \s*$""",
    re.VERBOSE,
)


def parse_quad(text: str, D: int | None = None) -> QuadNum:
    """Parse ``"p/q"``, ``"p/q+r/s*sqrt(D)"``, ``"-2*sqrt(5)"`` and the like.

    If ``D`` is given, a radicand in the text must agree with it.
    """
    m = _QUAD_RE.match(text)
    if not m or (m.group("a") is None and m.group("D") is None):
        raise ValueError(f"cannot parse exact number {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("D") is None:
        return QuadNum(a, 0, D or 0)
    radicand = int(m.group("D"))
    if D is not None and radicand != D and _square_root_of_int(radicand) is None:
        raise ValueError(f"radicand {radicand} does not match sqrt({D})")
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("bsign") == "-":
        b = -b
    value = QuadNum(a, b, radicand)
    return value if value.b or D is None else QuadNum(value.a, 0, D)


@total_ordering
class Surd:
    """The real number ``a + b*sqrt(s)`` with ``a, b, s`` in Q(sqrt(D)), ``s >= 0``.

    Only exact sign and comparison are provided; :meth:`collapse` returns the
    value as a :class:`QuadNum` when ``s`` is a square in the field.
    """

    __slots__ = ("a", "b", "s")

    def __init__(self, a, b, s) -> None:
        s = as_quad(s)
        if s.sign() < 0:
            raise ValueError("surd radicand must be non-negative")
        self.a = as_quad(a, s.D)
        self.b = as_quad(b, s.D)
        self.s = s

    def sign(self) -> int:
        return _sign_of_sum(self.a, self.b, self.s, lambda q: q.sign())

    def collapse(self) -> QuadNum | None:
        try:
            root = self.s.sqrt()
        except ValueError:
            return None
        return self.a + self.b * root

    def _shift(self, other) -> Surd:
        return Surd(self.a - as_quad(other, self.s.D), self.b, self.s)

    def __eq__(self, other) -> bool:
        if isinstance(other, Surd):
            return NotImplemented
        return self._shift(other).sign() == 0

    def __lt__(self, other) -> bool:
        return self._shift(other).sign() < 0

    __hash__ = None  # type: ignore[assignment]

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.s))

    def __str__(self) -> str:
        exact = self.collapse()
        if exact is not None:
            return str(exact)
        return f"{self.a}+({self.b})*sqrt({self.s})"

    def __repr__(self) -> str:
        return f"Surd({self.a!r}, {self.b!r}, {self.s!r})"
