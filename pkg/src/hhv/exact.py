"""Exact rational Bernoulli numbers and generalized binomial coefficients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import ParameterError

MAX_BERNOULLI_INDEX = 200


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_n as reduced fractions, with the B_1 = -1/2 convention."""

    values: Tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def as_float(self, n: int) -> float:
        return float(self.values[n])


@lru_cache(maxsize=None)
def _bernoulli_prefix(n: int) -> Tuple[Fraction, ...]:
    if n == 0:
        return (Fraction(1),)
    prev = _bernoulli_prefix(n - 1)
    if n >= 3 and n % 2 == 1:
        return prev + (Fraction(0),)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    acc = sum((math.comb(n + 1, j) * b for j, b in enumerate(prev)), Fraction(0))
    return prev + (-acc / (n + 1),)


def bernoulli_table(max_index: int) -> BernoulliTable:
    """Return B_0..B_max_index exactly."""
    if isinstance(max_index, bool) or not isinstance(max_index, int):
        raise ParameterError(f"max_index must be an integer, got {max_index!r}")
    if max_index < 0:
        raise ParameterError(f"max_index must be >= 0, got {max_index}")
    if max_index > MAX_BERNOULLI_INDEX:
        raise ParameterError(
            f"max_index {max_index} exceeds cap {MAX_BERNOULLI_INDEX}")
    # build iteratively so deep indices do not hit the recursion limit
    for n in range(0, max_index + 1, 50):
        _bernoulli_prefix(n)
    return BernoulliTable(_bernoulli_prefix(max_index))


def gen_binomial(alpha: float, k: int) -> float:
    """Generalized binomial coefficient ``alpha choose k`` for real alpha.

    The product (alpha)(alpha-1)...(alpha-k+1)/k! is formed in exact
    rational arithmetic (a double is an exact dyadic rational) in ascending
    factor order and rounded once, so the result is correctly rounded and
    identical on every platform.
    """
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if not math.isfinite(alpha):
        raise ParameterError(f"alpha must be finite, got {alpha!r}")
    if k == 0:
        return 1.0
    if float(alpha).is_integer() and 0 <= alpha:
        return float(math.comb(int(alpha), k))
    a = Fraction(alpha)
    prod = Fraction(1)
    for j in range(k):
        prod *= a - j
    return float(prod / math.factorial(k))
