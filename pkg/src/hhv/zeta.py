"""Euler-Maclaurin evaluation of zeta(rho) and of power-sum tails.

Every infinite sum comes back as an :class:`~hhv.interval.Interval`.  The
Euler-Maclaurin remainder is ``eps * T_l`` with an unknown ``0 < eps < 1``;
it is bracketed by evaluating at ``eps = 0`` and ``eps = 1``.  On top of that
each endpoint is pushed outward by a rounding slack of ``SLACK_ULPS`` units
in the last place per accumulated term (env ``HHV_DEFAULT_PRECISION_SLACK_ULPS``).
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import List, Tuple

from .errors import DivergenceError, DomainError, ParameterError, PoleError
from .exact import bernoulli_table, gen_binomial
from .interval import Interval
from .summation import Neumaier

SLACK_ENV = "HHV_DEFAULT_PRECISION_SLACK_ULPS"
DEFAULT_SLACK_ULPS = 4.0
_EPS = 2.0 ** -52


def slack_ulps() -> float:
    raw = os.environ.get(SLACK_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SLACK_ULPS
    try:
        val = float(raw)
    except ValueError:
        raise ParameterError(f"{SLACK_ENV}={raw!r} is not a number") from None
    if not (math.isfinite(val) and val >= 0):
        raise ParameterError(f"{SLACK_ENV} must be a finite number >= 0")
    return val


def rounding_slack(abs_total: float) -> float:
    """Slack for a sum whose terms have absolute values adding to ``abs_total``.

    ``ulp(x) <= 2**-52 * |x|``, so this dominates ``ulps * sum(ulp(t_i))``.
    """
    return slack_ulps() * _EPS * abs_total


@dataclass(frozen=True)
class EmSettings:
    """Split point ``m`` and remainder order ``l`` of the expansion."""

    m: int = 16
    l: int = 8

    def __post_init__(self):
        for name in ("m", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ParameterError(f"EmSettings.{name} must be an integer >= 1, got {v!r}")


DEFAULT_SETTINGS = EmSettings()


def partial_power_sum(s: float, m: int) -> float:
    """``sum_{n=1}^{m} n**-s``, compensated, ascending n."""
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")
    acc = Neumaier()
    for n in range(1, m + 1):
        acc.add(n ** -s)
    return acc.value


def correction_terms(rho: float, settings: EmSettings) -> List[float]:
    """Bernoulli correction terms T_1..T_l of the expansion at split ``m``.

    ``T_k = -B_2k/(2k) * binom(-rho, 2k-1) / m**(rho + 2k - 1)``; the first
    ``l - 1`` enter the sum, ``T_l`` is the remainder scaled by eps.
    """
    m, l = settings.m, settings.l
    table = bernoulli_table(2 * l)
    out = []
    for k in range(1, l + 1):
        b = table.as_float(2 * k)
        out.append(-b / (2 * k) * gen_binomial(-rho, 2 * k - 1) * float(m) ** (-rho - 2 * k + 1))
    return out


def _check_turning_point(terms: List[float], settings: EmSettings) -> None:
    if len(terms) >= 2 and abs(terms[-1]) > abs(terms[-2]):
        raise ParameterError(
            f"l={settings.l} is past the turning point of the expansion at "
            f"m={settings.m} (|T_l|={abs(terms[-1]):.3g} > |T_(l-1)|={abs(terms[-2]):.3g}); "
            "lower l or raise m")


def _zeta_parts(rho: float, settings: EmSettings) -> Tuple[float, float, float]:
    """Deterministic part, remainder term, and sum of |terms| (for slack)."""
    m = settings.m
    head = partial_power_sum(rho, m)
    big = float(m) ** (1.0 - rho) / (1.0 - rho)
    half = 0.5 * float(m) ** -rho
    corr = correction_terms(rho, settings)
    _check_turning_point(corr, settings)
    parts = [head, -big, -half] + corr[:-1]
    center = math.fsum(parts)
    abs_total = math.fsum(abs(x) for x in parts) + abs(corr[-1])
    return center, corr[-1], abs_total


def zeta_em(rho: float, settings: EmSettings = DEFAULT_SETTINGS) -> Interval:
    """Interval containing zeta(rho) for real ``rho >= 0``, ``rho != 1``."""
    if not math.isfinite(rho):
        raise DomainError(f"rho must be finite, got {rho!r}")
    if rho == 1:
        raise PoleError("zeta has a pole at rho = 1")
    if rho < 0:
        raise DomainError(f"rho must be >= 0, got {rho!r}")
    center, rem, abs_total = _zeta_parts(rho, settings)
    slack = rounding_slack(abs_total)
    return Interval(center + min(rem, 0.0), center + max(rem, 0.0)).widen(slack)


def integral_tail_bracket(s: float, m: int) -> Interval:
    """Integral-test bracket ``[I, I + m**-s]`` with ``I = m**(1-s)/(s-1)``."""
    integral = float(m) ** (1.0 - s) / (s - 1.0)
    top = float(m) ** -s
    return Interval(integral, integral + top).widen(rounding_slack(integral + top))


def tail_from_zeta(z: Interval, head: float, s: float, m: int) -> Interval:
    """``z - head`` intersected with the integral-test bracket at ``m``.

    ``head`` is the compensated sum of n**-s for n < m.
    """
    diff = (z - head).widen(rounding_slack(abs(head)))
    return diff.intersect(integral_tail_bracket(s, m))


def tail_power_sum(s: float, m: int, settings: EmSettings = DEFAULT_SETTINGS) -> Interval:
    """Interval containing ``sum_{n=m}^inf n**-s`` for ``s > 1``."""
    if not s > 1:
        raise DivergenceError(f"power sum diverges for s = {s!r} <= 1")
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    z = zeta_em(s, settings)
    head = partial_power_sum(s, m - 1)
    return tail_from_zeta(z, head, s, m)
