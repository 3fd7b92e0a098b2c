"""Closed real intervals with outward-rounded endpoints."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantViolation



def down(x: float) -> float:
    return math.nextafter(x, -math.inf)


def up(x: float) -> float:
    return math.nextafter(x, math.inf)


@dataclass(frozen=True)
class Interval:
    """A bracket ``[lo, hi]`` certified to contain some real quantity."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvariantViolation(f"non-finite interval [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise InvariantViolation(f"inverted interval [{self.lo}, {self.hi}]")

    @classmethod
    def around(cls, center: float, radius: float) -> "Interval":
        """Interval ``[center - radius, center + radius]``, rounded outward."""
        return cls(down(center - radius), up(center + radius))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        if not self.intersects(other):
            raise InvariantViolation(f"empty intersection of {self} and {other}")
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def widen(self, slack: float) -> "Interval":
        return Interval(down(self.lo - slack), up(self.hi + slack))

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(down(self.lo + other.lo), up(self.hi + other.hi))
        return Interval(down(self.lo + other), up(self.hi + other))

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: float) -> "Interval":
        """Multiply by a point value ``c``; endpoints rounded outward."""
        a, b = self.lo * c, self.hi * c
        if a > b:
            a, b = b, a
        return Interval(down(a), up(b))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"
