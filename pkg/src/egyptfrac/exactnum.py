"""Exact arithmetic over rationals and real quadratic irrationals.

Rationals are plain ``fractions.Fraction`` (arbitrary precision, always in
lowest terms, positive denominator).  Irrationals of the form a + b*sqrt(D)
with a, b rational and D a positive non-square integer are represented by
:class:`QuadraticValue`.  No floating point is used anywhere in this module:
signs, comparisons, rounding, and decimal rendering are all decided with
integer arithmetic, so every result is exact.

The one global rounding convention, used everywhere in the package, is
nearest-integer with ties toward +infinity: round(x) = floor(x + 1/2).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt, lcm

from .errors import RadicandMismatch

__all__ = [
    "QuadraticValue",
    "ExactValue",
    "rat_nearest_int",
    "quad_nearest_int",
    "nearest_int",
    "floor_value",
    "ceil_value",
    "quad_sign",
    "sign_of",
    "quad_arith",
    "quad_to_decimal",
    "to_decimal",
    "parse_value",
    "format_value",
    "decimal_digits",
]


def rat_nearest_int(x: int | Fraction) -> int:
    """Nearest integer to a rational; exact ties round toward +infinity."""
    if isinstance(x, int):
        return x
    # floor(x + 1/2) via one integer floor division (denominator is > 0)
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def _rat_sign(x: int | Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _is_square(n: int) -> bool:
    r = isqrt(n)
    return r * r == n


class QuadraticValue:
    """An exact element ``a + b*sqrt(rad)`` of a real quadratic field.

    ``a`` and ``b`` are rationals, ``rad`` is a fixed positive non-square
    integer, so each value denotes a unique real number.  Arithmetic with
    ints, Fractions and same-radicand QuadraticValues is supported through
    the usual operators; mixing different radicands raises
    :class:`~egyptfrac.errors.RadicandMismatch`.
    """

    __slots__ = ("a", "b", "rad")

    def __init__(self, a, b, rad: int):
        if not isinstance(rad, int) or rad < 1:
            raise ValueError(f"radicand must be a positive integer, got {rad!r}")
        if _is_square(rad):
            raise ValueError(f"radicand must not be a perfect square, got {rad}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "rad", rad)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticValue is immutable")

    # -- construction helpers -------------------------------------------

    def _lift(self, other) -> "QuadraticValue | None":
        if isinstance(other, QuadraticValue):
            if other.rad != self.rad:
                raise RadicandMismatch(
                    f"cannot combine sqrt({self.rad}) with sqrt({other.rad})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticValue(other, 0, self.rad)
        return None

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(rad), decided exactly.

        When a and b do not disagree in sign the answer is immediate;
        otherwise compare a^2 against rad*b^2 (they can only be equal when
        a = b = 0, since rad is not a square).
        """
        sa, sb = _rat_sign(self.a), _rat_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        s = _rat_sign(self.a * self.a - self.rad * self.b * self.b)
        return sa * s

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticValue(self.a + o.a, self.b + o.b, self.rad)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticValue(self.a - o.a, self.b - o.b, self.rad)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticValue(o.a - self.a, o.b - self.b, self.rad)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadraticValue(
            self.a * o.a + self.rad * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.rad,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticValue":
        """Exact reciprocal via the conjugate: 1/(a+b*sqrt(D)) = (a-b*sqrt(D))/(a^2-D*b^2)."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero quadratic value")
        norm = self.a * self.a - self.rad * self.b * self.b
        # norm == 0 would force sqrt(rad) rational; the constructor excludes that
        return QuadraticValue(self.a / norm, -self.b / norm, self.rad)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.rad)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparisons ------------------------------------------------------

    def _cmp(self, other) -> int | None:
        o = self._lift(other)
        if o is None:
            return None
        return (self - o).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        # values with b == 0 are numerically rational and must hash like one
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.rad))

    def __repr__(self):
        return f"QuadraticValue({self.a!r}, {self.b!r}, rad={self.rad})"

    def __str__(self):
        return format_value(self)


ExactValue = Fraction | QuadraticValue


def quad_sign(x: QuadraticValue) -> int:
    """Sign (-1, 0, +1) of a quadratic value, without floating point."""
    return x.sign()


def sign_of(x) -> int:
    """Sign of an int, Fraction, or QuadraticValue."""
    if isinstance(x, QuadraticValue):
        return x.sign()
    return _rat_sign(x)


def _quad_floor(x: QuadraticValue) -> int:
    """Exact floor of a quadratic value.

    A candidate comes from an integer square root of rad carrying enough
    extra bits to localise b*sqrt(rad) to within 1/4; exact sign tests then
    fix the at-most-off-by-one candidate.  No precision parameter needed.
    """
    if x.b == 0:
        return x.a.numerator // x.a.denominator
    b = x.b
    extra = max(0, b.numerator.bit_length() - b.denominator.bit_length()) + 42
    s = isqrt(x.rad << (2 * extra))
    # s/2^extra <= sqrt(rad) < (s+1)/2^extra; pick the side that underestimates x
    approx = Fraction(s if b > 0 else s + 1, 1 << extra)
    est = x.a + b * approx
    n = est.numerator // est.denominator
    while (x - (n + 1)).sign() >= 0:
        n += 1
    while (x - n).sign() < 0:
        n -= 1
    return n


def quad_nearest_int(x: QuadraticValue) -> int:
    """Nearest integer to a quadratic value, ties toward +infinity."""
    if x.b == 0:
        return rat_nearest_int(x.a)
    return _quad_floor(x + Fraction(1, 2))


def nearest_int(x) -> int:
    """floor(x + 1/2) for an int, Fraction, or QuadraticValue."""
    if isinstance(x, QuadraticValue):
        return quad_nearest_int(x)
    return rat_nearest_int(x)


def floor_value(x) -> int:
    if isinstance(x, QuadraticValue):
        return _quad_floor(x)
    x = Fraction(x)
    return x.numerator // x.denominator


def ceil_value(x) -> int:
    return -floor_value(-x)


_ARITH_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def quad_arith(x: QuadraticValue, y: QuadraticValue, op: str) -> QuadraticValue:
    """Field arithmetic on two quadratic values sharing a radicand.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div``.  Division is exact,
    via multiplication by the conjugate.
    """
    try:
        fn = _ARITH_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


def _format_scaled(m: int, digits: int) -> str:
    sign = "-" if m < 0 else ""
    q, r = divmod(abs(m), 10**digits)
    return f"{sign}{q}.{r:0{digits}d}"


def quad_to_decimal(x: QuadraticValue, digits: int) -> str:
    """Correctly rounded decimal expansion of a quadratic value.

    ``digits`` fractional digits are produced by exact scaling: the value is
    multiplied by 10^digits and rounded to the nearest integer (ties toward
    +infinity, the package-wide convention).
    """
    if not 1 <= digits <= 10**6:
        raise ValueError(f"digits must be in [1, 10^6], got {digits}")
    m = quad_nearest_int(x * (10**digits))
    return _format_scaled(m, digits)


def to_decimal(x, digits: int) -> str:
    """Decimal rendering of an int, Fraction, or QuadraticValue."""
    if isinstance(x, QuadraticValue):
        return quad_to_decimal(x, digits)
    if not 1 <= digits <= 10**6:
        raise ValueError(f"digits must be in [1, 10^6], got {digits}")
    return _format_scaled(rat_nearest_int(Fraction(x) * 10**digits), digits)


_INT_RE = re.compile(r"^\s*([+-]?\d+)\s*$")
_FRAC_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")
_QUAD_RE = re.compile(
    r"^\s*\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*sqrt\s*(\d+)\s*\)\s*/\s*(\d+)\s*$"
)


def parse_value(text: str) -> ExactValue:
    """Parse the exact-value grammar used by the CLI.

    Accepted forms (whitespace optional): ``INT``, ``INT/POSINT``, and
    ``( INT (+|-) POSINT sqrt POSINT ) / POSINT``, e.g. ``(5-1 sqrt 5)/2``.
    """
    m = _INT_RE.match(text)
    if m:
        return Fraction(int(m.group(1)))
    m = _FRAC_RE.match(text)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    m = _QUAD_RE.match(text)
    if m:
        a_num, sgn, b_num, rad, den = m.groups()
        den = int(den)
        b = int(b_num)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        if b == 0:
            raise ValueError(f"sqrt coefficient must be positive in {text!r}")
        if sgn == "-":
            b = -b
        return QuadraticValue(Fraction(int(a_num), den), Fraction(b, den), int(rad))
    raise ValueError(f"cannot parse exact value: {text!r}")


def format_value(x) -> str:
    """Serialize an exact value in the grammar accepted by :func:`parse_value`."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    q = lcm(x.a.denominator, x.b.denominator)
    a_num = x.a.numerator * (q // x.a.denominator)
    b_num = x.b.numerator * (q // x.b.denominator)
    if b_num == 0:
        return f"{a_num}/{q}"
    sgn = "+" if b_num > 0 else "-"
    return f"({a_num}{sgn}{abs(b_num)} sqrt {x.rad})/{q}"


def decimal_digits(n: int) -> int:
    """Number of decimal digits of |n|, computed without str() conversion."""
    n = abs(n)
    if n == 0:
        return 1
    # 30103/100000 < log10(2): start from a guaranteed underestimate
    d = ((n.bit_length() - 1) * 30103) // 100000 + 1
    while 10**d <= n:
        d += 1
    return d
