"""Exact Gaussian rationals p + q*i with p, q in Q."""

from __future__ import annotations

import re
from fractions import Fraction

_NUM = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?:(?P<re>{_NUM})(?P<im>[+-](?:\d+(?:/\d+)?)?)i"
    rf"|(?P<onlyim>[+-]?(?:\d+(?:/\d+)?)?)i"
    rf"|(?P<onlyre>{_NUM}))$"
)


def _frac(text: str) -> Fraction:
    return Fraction(text)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``p/q+r/si`` style text (``3``, ``-i``, ``1/2-3i``, ...).

        Raises ValueError or ZeroDivisionError on malformed input.
        """
        s = text.strip().replace(" ", "")
        m = _GAUSS_RE.match(s)
        if not m:
            raise ValueError(f"not a Gaussian rational: {text!r}")
        if m.group("onlyre") is not None:
            return cls(_frac(m.group("onlyre")), 0)
        if m.group("onlyim") is not None:
            return cls(0, _coef(m.group("onlyim")))
        return cls(_frac(m.group("re")), _coef(m.group("im")))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        den = other.re * other.re + other.im * other.im
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = f"{self.im}i"
        if self.re == 0:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"

    def __repr__(self):
        return f"GaussianRational({self})"


def _coef(text: str) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return _frac(text)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    return NotImplemented
