"""Exact complex scalars with rational real and imaginary parts.

Every identity checked by this package is decided by equality of such
scalars, so there is no floating point anywhere in the algebraic core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ScalarQ:
    """A complex number ``re + im*i`` with ``re``, ``im`` rational.

    Addition, multiplication, conjugation, division and equality are all
    exact; construction accepts ints and Fractions for both parts.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ScalarQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ScalarQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ScalarQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = other.abs_sq()
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        num = self * other.conjugate()
        return ScalarQ(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return ScalarQ(-self.re, -self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> ScalarQ:
        return ScalarQ(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def serialize(self) -> str:
        """Canonical text form ``p/q+r/s·i`` (sign folded into the separator)."""
        sep, im = ("+", self.im) if self.im >= 0 else ("-", -self.im)
        return (
            f"{self.re.numerator}/{self.re.denominator}"
            f"{sep}{im.numerator}/{im.denominator}·i"
        )

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        im = abs(self.im)
        return f"{self.re}{sign}{im if im != 1 else ''}i"

    def __repr__(self):
        return f"ScalarQ({self.re!r}, {self.im!r})"


def _coerce(x):
    if isinstance(x, ScalarQ):
        return x
    if isinstance(x, (int, Fraction)):
        return ScalarQ(Fraction(x))
    return None


def as_scalar(x) -> ScalarQ:
    """Coerce an int, Fraction or ScalarQ to a ScalarQ; reject anything else."""
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {type(x).__name__} as an exact scalar")
    return s


ZERO = ScalarQ()
ONE = ScalarQ(Fraction(1))
I = ScalarQ(Fraction(0), Fraction(1))
