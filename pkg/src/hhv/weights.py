"""Weight coefficients omega(m, lambda, p) and their upper bounds.

The weight is split at ``n = m`` (the ``n = m`` term is counted in both
pieces and subtracted once)::

    omega(m) = m**(rho - lam) * sum_{n<=m} n**-rho - m**-lam
               + m**rho * sum_{n>=m} n**-s,

    rho = (2 - lam)/p,  s = 2/p + lam/q = rho + lam.

The finite sum is a point value with rounding slack; the tail is an
interval from :func:`hhv.zeta.tail_power_sum`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional

from .errors import InvariantViolation, ParameterError
from .interval import Interval
from .summation import Neumaier
from .zeta import (DEFAULT_SETTINGS, EmSettings, rounding_slack, tail_from_zeta, zeta_em)

ADMISSIBILITY_MARGIN = 1e-6
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class HolderParams:
    """Conjugate exponents ``(p, q)`` and the kernel exponent ``lam``.

    ``q`` is derived as ``p/(p-1)`` unless given explicitly (used when the
    roles of ``p`` and ``q`` are exchanged).  Construction fails with
    :class:`ParameterError` outside ``2 - min(p, q) < lam <= 2``.
    """

    p: float
    lam: float
    q: Optional[float] = None
    k_lambda: float = field(init=False)

    def __post_init__(self):
        p, lam = float(self.p), float(self.lam)
        if not (math.isfinite(p) and math.isfinite(lam)):
            raise ParameterError("p and lambda must be finite")
        if not p > 1:
            raise ParameterError(f"p must exceed 1, got {p}")
        q = p / (p - 1.0) if self.q is None else float(self.q)
        if not q > 1:
            raise ParameterError(f"q must exceed 1, got {q}")
        if abs(1.0 / p + 1.0 / q - 1.0) > 4 * _EPS:
            raise ParameterError(f"p={p} and q={q} are not conjugate")
        lower = 2.0 - min(p, q)
        if lam > 2.0:
            raise ParameterError(f"lambda={lam} exceeds 2")
        if lam - lower < ADMISSIBILITY_MARGIN:
            raise ParameterError(
                f"lambda={lam} is not admissible for p={p:g}: need lambda > 2 - min(p, q) = {lower:.12g}"
                f" by at least {ADMISSIBILITY_MARGIN:g}")
        k = lam * p * q / ((p + lam - 2.0) * (q + lam - 2.0))
        if not k > 0:
            raise InvariantViolation(f"k_lambda={k} is not positive")
        if not 2.0 / p + lam / q > 1.0:
            raise InvariantViolation(f"tail exponent 2/p + lam/q = {2.0 / p + lam / q} <= 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "k_lambda", k)

    @property
    def rho(self) -> float:
        """Exponent (2 - lam)/p of the finite part."""
        return (2.0 - self.lam) / self.p

    @property
    def tail_exponent(self) -> float:
        return 2.0 / self.p + self.lam / self.q

    def swapped(self) -> "HolderParams":
        return HolderParams(self.q, self.lam, q=self.p)


@dataclass(frozen=True)
class WeightEstimate:
    m: int
    value: Interval
    bound: float
    margin: float

    @property
    def confirmed(self) -> bool:
        """Strict bound, judged against the pessimistic endpoint."""
        return self.margin > 0


def _weights(params: HolderParams, m_max: int, settings: EmSettings) -> Iterator[Interval]:
    """omega(m, lam, p) for m = 1..m_max, sharing one zeta evaluation."""
    rho, s, lam = params.rho, params.tail_exponent, params.lam
    z = zeta_em(s, settings)
    finite = Neumaier()   # sum_{n<=m} n**-rho
    head = Neumaier()     # sum_{n<m} n**-s
    for m in range(1, m_max + 1):
        fm = float(m)
        finite.add(fm ** -rho)
        if m > 1:
            head.add((fm - 1.0) ** -s)
        tail = tail_from_zeta(z, head.value, s, m)
        front = fm ** (rho - lam) * finite.value
        corner = fm ** -lam
        scale = fm ** rho
        point = front - corner
        val = tail.scale(scale) + point
        yield val.widen(rounding_slack(abs(front) + corner + abs(val.hi)))


def _check_m(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ParameterError(f"index must be an integer >= 1, got {m!r}")


def weight_omega(m: int, params: HolderParams, settings: EmSettings = DEFAULT_SETTINGS) -> Interval:
    """Interval containing omega(m, lam, p) = sum_n (m/n)**rho / max(m, n)**lam."""
    _check_m(m)
    for val in _weights(params, m, settings):
        pass
    return val


def weight_omega_dual(n: int, params: HolderParams, settings: EmSettings = DEFAULT_SETTINGS) -> Interval:
    """omega(n, lam, q): the same series with p and q exchanged."""
    return weight_omega(n, params.swapped(), settings)


def bound_24(m: int, params: HolderParams) -> float:
    p, lam, k = params.p, params.lam, params.k_lambda
    c = p + lam - 2.0
    return m ** (1.0 - lam) * (k - p / (3.0 * c * m ** (c / p)))


def bound_25(n: int, params: HolderParams, literal: bool = False) -> float:
    """Upper bound for omega(n, lam, q).

    The default uses ``3(q + lam - 2)`` in the correction denominator, the
    form consumed by the bilinear inequality; ``literal=True`` uses the
    lemma's printed ``3(p + lam - 2)``.
    """
    p, q, lam, k = params.p, params.q, params.lam, params.k_lambda
    denom = 3.0 * ((p if literal else q) + lam - 2.0)
    return n ** (1.0 - lam) * (k - q / (denom * n ** ((q + lam - 2.0) / q)))


def check_weight_bounds(params: HolderParams, m_max: int, dual: bool = False,
                        literal: bool = False,
                        settings: EmSettings = DEFAULT_SETTINGS) -> List[WeightEstimate]:
    """Compare omega against its bound for every m in 1..m_max.

    ``dual=True`` checks omega(n, lam, q) against :func:`bound_25` instead.
    Violations are reported through ``margin``, never raised.
    """
    _check_m(m_max)
    src = params.swapped() if dual else params
    out = []
    for m, val in enumerate(_weights(src, m_max, settings), start=1):
        b = bound_25(m, params, literal=literal) if dual else bound_24(m, params)
        out.append(WeightEstimate(m, val, b, b - val.hi))
    return out


class ChainGap(NamedTuple):
    m: int
    gap: float
    resolution: float

    @property
    def ok(self) -> bool:
        return self.gap >= -self.resolution


def check_negativity_chain(params: HolderParams, m_max: int,
                           settings: EmSettings = DEFAULT_SETTINGS) -> List[ChainGap]:
    """Gap in ``-zeta(rho) - (p lam + 2q)/(12 p q m**c) > p/(3c)``, ``c = p + lam - 2``.

    Uses the upper end of the zeta bracket.  The gap is exactly 0 at
    ``lam = 2, m = 1``, so ``ok`` compares against the interval resolution.
    """
    _check_m(m_max)
    p, q, lam = params.p, params.q, params.lam
    rho = params.rho
    if rho == 1:
        raise ParameterError("rho = (2 - lambda)/p hits the pole")
    z = zeta_em(rho, settings)
    c = p + lam - 2.0
    rhs = p / (3.0 * c)
    out = []
    for m in range(1, m_max + 1):
        corr = (p * lam + 2.0 * q) / (12.0 * p * q * m ** (c / p))
        gap = math.fsum([-z.hi, -corr, -rhs])
        res = z.width + rounding_slack(abs(z.hi) + corr + rhs)
        out.append(ChainGap(m, gap, res))
    return out
