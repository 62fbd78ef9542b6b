"""Exact Gaussian-rational scalars.

Every numeric quantity in this package (twist parameters, weight coordinates,
matrix entries) is a Gaussian rational a + b*i with both parts stored as
reduced :class:`fractions.Fraction` values.  Arithmetic is exact; there is no
floating point anywhere.

String forms (used in JSON and CSV):

* a real value prints as ``"3"`` or ``"-3/4"`` (never ``"3/1"``);
* a value with a nonzero imaginary part prints as ``"1/2+3/4i"`` or
  ``"1/2-3/4i"``, with the real part always present.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

__all__ = [
    "Scalar",
    "scalar",
    "rat_str",
    "parse_rat",
    "scalar_str",
    "parse_scalar",
    "scalar_to_json",
    "scalar_from_json",
    "scalar_sort_key",
]

RatLike = "int | Fraction"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


class Scalar:
    """A Gaussian rational, immutable and hashable.

    >>> Scalar(1, 2) + Scalar(Fraction(1, 2))
    Scalar('3/2+2i')
    >>> Scalar(3) / 2
    Scalar('3/2')
    >>> Scalar(3) == 3
    True
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return scalar(other) - self

    def __mul__(self, other):
        other = scalar(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __truediv__(self, other):
        other = scalar(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return scalar(other) / self

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # agrees with hash(int) / hash(Fraction) on real values
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"Scalar({scalar_str(self)!r})"

    def __str__(self):
        return scalar_str(self)


def scalar(x) -> Scalar:
    """Coerce an int, Fraction, or Scalar to a Scalar."""
    if isinstance(x, Scalar):
        return x
    return Scalar(_frac(x))


def scalar_sort_key(s: Scalar) -> tuple[Fraction, Fraction]:
    """Total-order key (real part, then imaginary part)."""
    return (s.re, s.im)


# -- string and JSON forms ---------------------------------------------------


def rat_str(x: Fraction) -> str:
    """Reduced rational string: ``"3"`` or ``"-3/4"``, never ``"3/1"``."""
    return str(_frac(x))


_RAT_RE = _re.compile(r"^-?\d+(/\d+)?$")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(text)


def scalar_str(s: Scalar) -> str:
    if s.im == 0:
        return rat_str(s.re)
    sign = "+" if s.im > 0 else "-"
    return f"{rat_str(s.re)}{sign}{rat_str(abs(s.im))}i"


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-3/4"``, or ``"1/2-3/4i"`` back to a Scalar."""
    text = text.strip()
    if text.endswith("i"):
        body = text[:-1]
        # split at the sign of the imaginary part (not the leading sign)
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "+-/":
                re_part, im_sign, im_part = body[:pos], body[pos], body[pos + 1 :]
                im = parse_rat(im_part)
                return Scalar(parse_rat(re_part), -im if im_sign == "-" else im)
        raise ValueError(f"malformed scalar string: {text!r}")
    return Scalar(parse_rat(text))


def scalar_to_json(s: Scalar) -> dict:
    return {"re": rat_str(s.re), "im": rat_str(s.im)}


def scalar_from_json(obj: dict) -> Scalar:
    return Scalar(parse_rat(obj["re"]), parse_rat(obj["im"]))
