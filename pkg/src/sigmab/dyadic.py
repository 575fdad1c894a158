"""Exact dyadic rationals ``numerator / 2**exponent``."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class DyadicError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True, eq=False)
class Dyadic:
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise DyadicError("exponent must be non-negative")
        num, exp = self.numerator, self.exponent
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def from_fraction(cls, q: Fraction) -> Dyadic:
        den = q.denominator
        if den & (den - 1):
            raise DyadicError(f"{q} is not dyadic: denominator {den} is not a power of two")
        return cls(q.numerator, den.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __eq__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return (self.numerator, self.exponent) == (other.numerator, other.exponent)

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __lt__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        return (self.numerator << (e - self.exponent)) < (other.numerator << (e - other.exponent))

    def half(self) -> Dyadic:
        """``t / 2``"""
        return Dyadic(self.numerator, self.exponent + 1)

    def upper_half(self) -> Dyadic:
        """``(t + 1) / 2``"""
        return Dyadic(self.numerator + (1 << self.exponent), self.exponent + 1)

    def in_open_unit(self) -> bool:
        return 0 < self.numerator < (1 << self.exponent)

    def __float__(self):
        return self.numerator / (1 << self.exponent)

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self):
        return f"Dyadic({self})"


_DYADIC_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(?:(\d+)|2\s*\^\s*(\d+)))?\s*$")


def parse_dyadic(text: str) -> Dyadic:
    """Accepts ``p``, ``p/q`` with ``q`` a power of two, or ``p/2^k``."""
    m = _DYADIC_RE.match(str(text))
    if not m:
        raise DyadicError(f"malformed dyadic {text!r}")
    num = int(m.group(1))
    if m.group(3) is not None:
        return Dyadic(num, int(m.group(3)))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DyadicError(f"zero denominator in {text!r}")
    return Dyadic.from_fraction(Fraction(num, den))


HALF = Dyadic(1, 1)
