"""Gaussian rational scalars.

The coefficient field everywhere in this package is Q(i): complex numbers
whose real and imaginary parts are exact rationals.  No floats, ever; every
rank/kernel decision downstream relies on exact zero tests here.
"""

from __future__ import annotations

import re
from fractions import Fraction


class Scalar:
    """An exact Gaussian rational ``re + im*i``.

    Immutable.  Both parts are ``fractions.Fraction`` (always reduced, with
    positive denominator).  Supports field arithmetic, conjugation and a
    canonical string form that round-trips through :func:`parse_scalar`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        other = as_scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def conj(self):
        return Scalar(self.re, -self.im)

    def norm2(self):
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_rational(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = as_scalar(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    # -- formatting ------------------------------------------------------

    def __str__(self):
        if self.im == 0:
            return _frac_str(self.re)
        i_part = f"{_frac_str(self.im)}*i"
        if self.re == 0:
            return i_part
        sign = "+" if self.im >= 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}*i"

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a Scalar")


def _frac_str(q):
    return str(q)  # Fraction prints p or p/q, always reduced


_TERM_RE = re.compile(
    r"""^\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<istar>i))?
          | (?P<ibare>i)
        )\s*""",
    re.VERBOSE,
)


def parse_scalar(text):
    """Parse ``p/q``, ``p/q*i``, ``i``, or a sum like ``1/2-3/4*i``.

    The printed form of every Scalar parses back to an equal Scalar.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty scalar literal")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s[pos:])
        if not m or (not first and m.group("sign") == ""):
            raise ValueError(f"bad scalar literal {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("ibare"):
            im_part += sign
        else:
            value = Fraction(m.group("coeff")) * sign
            if m.group("istar"):
                im_part += value
            else:
                re_part += value
        pos += m.end()
        first = False
    return Scalar(re_part, im_part)
