"""Compensated (Neumaier) summation.

``math.fsum`` is used wherever only a final total is needed; the running
accumulator here exists for prefix sums, where every partial value is
consumed.
"""
from __future__ import annotations

from typing import Iterable, List


class Neumaier:
    """Running compensated sum; add terms in ascending index order."""

    __slots__ = ("s", "c")

    def __init__(self, start: float = 0.0):
        self.s = float(start)
        self.c = 0.0

    def add(self, x: float) -> None:
        s = self.s
        t = s + x
        if abs(s) >= abs(x):
            self.c += (s - t) + x
        else:
            self.c += (x - t) + s
        self.s = t

    @property
    def value(self) -> float:
        return self.s + self.c


def neumaier_sum(xs: Iterable[float]) -> float:
    acc = Neumaier()
    for x in xs:
        acc.add(x)
    return acc.value


def neumaier_cumsum(xs: Iterable[float]) -> List[float]:
    """Compensated prefix sums: ``out[k] = xs[0] + ... + xs[k]``."""
    acc = Neumaier()
    out = []
    for x in xs:
        acc.add(x)
        out.append(acc.value)
    return out
