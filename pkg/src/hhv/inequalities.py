"""Both sides of the max-kernel bilinear inequalities and their variants.

LHS evaluation uses the prefix-sum form of the kernel ``1/max(m, n)**lam``::

    sum_m sum_n a_m b_n / max(m, n)**lam
        = sum_k k**-lam * (a_k * B(k) + b_k * A(k - 1)),

with ``A``, ``B`` the running sums of ``a`` and ``b``.  That is O(N);
:func:`naive_double_sum` is the O(N^2) double loop kept as an oracle.

Inequality ids follow the equation labels: ``"3.1"`` .. ``"3.8"`` for the
improved forms and ``"1.3"`` for the unimproved baseline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, List, Optional, Sequence as Seq

import numpy as np

from .errors import InvariantViolation, ParameterError
from .sequences import Sequence
from .summation import Neumaier
from .weights import HolderParams

DEFAULT_NMAX = 10_000


class IneqId(str, Enum):
    I31 = "3.1"
    I32 = "3.2"
    I33 = "3.3"
    I34 = "3.4"
    I35 = "3.5"
    I36 = "3.6"
    I37 = "3.7"
    I38 = "3.8"
    YANG13 = "1.3"


BILINEAR = {IneqId.I31, IneqId.I33, IneqId.I35, IneqId.I37, IneqId.YANG13}


def _values(x) -> Seq[float]:
    return x.values if isinstance(x, Sequence) else tuple(float(v) for v in x)


def _label(x) -> str:
    return x.label if isinstance(x, Sequence) else ""


def kernel_double_sum(a, b, params: HolderParams) -> float:
    """``sum_{m,n} a_m b_n / max(m, n)**lam`` over the finite supports, O(N)."""
    av, bv = _values(a), _values(b)
    lam = params.lam
    n = max(len(av), len(bv))
    pa, pb = Neumaier(), Neumaier()
    terms = []
    for k in range(1, n + 1):
        ak = av[k - 1] if k <= len(av) else 0.0
        bk = bv[k - 1] if k <= len(bv) else 0.0
        prev_a = pa.value          # A(k - 1)
        pb.add(bk)                 # B(k)
        pa.add(ak)
        if ak or bk:
            terms.append(float(k) ** -lam * (ak * pb.value + bk * prev_a))
    return math.fsum(terms)


def naive_double_sum(a, b, params: HolderParams) -> float:
    """Same quantity as :func:`kernel_double_sum` by the plain double loop."""
    av, bv = _values(a), _values(b)
    lam = params.lam
    terms = []
    for m, am in enumerate(av, start=1):
        for n, bn in enumerate(bv, start=1):
            terms.append(am * bn / float(max(m, n)) ** lam)
    return math.fsum(terms)


def _weighted_power_sum(x, power: float, lam: float,
                        bracket: Callable[[int], float] = lambda n: 1.0) -> float:
    """``sum_n bracket(n) * n**((power-1)(2-lam) - 1) * x_n**power``."""
    e = (power - 1.0) * (2.0 - lam) - 1.0
    return math.fsum(bracket(n) * float(n) ** e * v ** power
                     for n, v in enumerate(_values(x), start=1) if v)


def _weighted_norm(x, power: float, lam: float,
                   bracket: Callable[[int], float] = lambda n: 1.0) -> float:
    """``_weighted_power_sum(...) ** (1/power)`` without under/overflow.

    The largest entry is factored out as a power of two, which is exact.
    """
    vals = _values(x)
    top = max(vals)
    if top == 0:
        return 0.0
    scale = math.ldexp(1.0, math.frexp(top)[1])
    scaled = [v / scale for v in vals]
    return scale * _weighted_power_sum(scaled, power, lam, bracket) ** (1.0 / power)


def _improved_bracket(params: HolderParams, power: float, numer: float) -> Callable[[int], float]:
    """``n -> k - numer / (3 c n**(c/power))`` with ``c = power + lam - 2``."""
    k, lam = params.k_lambda, params.lam
    c = power + lam - 2.0
    def f(n: int) -> float:
        return k - numer / (3.0 * c * float(n) ** (c / power))
    # the bracket increases with n, so n = 1 is the binding case
    if not f(1) > 0:
        raise InvariantViolation(
            f"bracket k - {numer:g}/(3*{c:g}) = {f(1)} is not positive at n = 1 "
            f"(p={params.p:g}, lambda={params.lam:g})")
    return f


def _unit_bracket(params: HolderParams, power: float, other: float) -> Callable[[int], float]:
    """``n -> 1 - 1/(3 other (power-1) n**((power-1)/power))`` (lambda = 1)."""
    def f(n: int) -> float:
        return 1.0 - 1.0 / (3.0 * other * (power - 1.0) * float(n) ** ((power - 1.0) / power))
    if not f(1) > 0:
        raise InvariantViolation(f"bracket is not positive at n = 1 for p={params.p:g}")
    return f


def _sqrt_bracket(n: int) -> float:
    return 1.0 - 1.0 / (6.0 * math.sqrt(n))


def _bilinear_rhs(a, b, params: HolderParams, numer_p: Optional[float], numer_q: Optional[float]) -> float:
    p, q, lam = params.p, params.q, params.lam
    ba = _improved_bracket(params, p, numer_p)
    bb = _improved_bracket(params, q, numer_q)
    return _weighted_norm(a, p, lam, ba) * _weighted_norm(b, q, lam, bb)


def rhs_31(a, b, params: HolderParams) -> float:
    return _bilinear_rhs(a, b, params, params.p, params.q)


def rhs_33(a, b, params: HolderParams) -> float:
    return _bilinear_rhs(a, b, params, 1.0, 1.0)


def rhs_yang13(a, b, params: HolderParams) -> float:
    p, q, lam = params.p, params.q, params.lam
    return params.k_lambda * _weighted_norm(a, p, lam) * _weighted_norm(b, q, lam)


def rhs_32(a, params: HolderParams) -> float:
    p, k = params.p, params.k_lambda
    return k ** (p - 1.0) * _weighted_power_sum(a, p, params.lam, _improved_bracket(params, p, p))


def rhs_34(a, params: HolderParams) -> float:
    p, k = params.p, params.k_lambda
    return k ** (p - 1.0) * _weighted_power_sum(a, p, params.lam, _improved_bracket(params, p, 1.0))


def rhs_32_baseline(a, params: HolderParams) -> float:
    """Unimproved counterpart ``k**p * sum n**((p-1)(2-lam)-1) a_n**p``."""
    return params.k_lambda ** params.p * _weighted_power_sum(a, params.p, params.lam)


def _require_lambda_one(params: HolderParams, which: IneqId) -> None:
    if params.lam != 1.0:
        raise ParameterError(f"inequality {which.value} requires lambda = 1, got {params.lam:g}")


def _require_p_two(params: HolderParams, which: IneqId) -> None:
    _require_lambda_one(params, which)
    if params.p != 2.0:
        raise ParameterError(f"inequality {which.value} requires p = q = 2, got p = {params.p:g}")


def rhs_35(a, b, params: HolderParams) -> float:
    _require_lambda_one(params, IneqId.I35)
    p, q = params.p, params.q
    # at lambda = 1 the weight n**((p-1)(2-lam)-1) is n**(p-2)
    return (p * q * _weighted_norm(a, p, 1.0, _unit_bracket(params, p, q))
            * _weighted_norm(b, q, 1.0, _unit_bracket(params, q, p)))


def rhs_36(a, params: HolderParams) -> float:
    _require_lambda_one(params, IneqId.I36)
    p, q = params.p, params.q
    br = _unit_bracket(params, p, q)
    s = math.fsum(br(n) * float(n) ** (p - 2.0) * v ** p
                  for n, v in enumerate(_values(a), start=1) if v)
    return (p * q) ** p * s


def rhs_37(a, b, params: HolderParams) -> float:
    _require_p_two(params, IneqId.I37)
    return 4.0 * _weighted_norm(a, 2.0, 1.0, _sqrt_bracket) * _weighted_norm(b, 2.0, 1.0, _sqrt_bracket)


def rhs_38(a, params: HolderParams) -> float:
    _require_p_two(params, IneqId.I38)
    return 16.0 * math.fsum(_sqrt_bracket(n) * v * v for n, v in enumerate(_values(a), start=1) if v)


def row_sum_lhs(a, params: HolderParams, n_max: int) -> float:
    """``sum_{n<=n_max} n**(p+lam-3) * (sum_m a_m / max(m, n)**lam)**p``.

    The outer sum is infinite even for finite ``a``; cutting it at
    ``n_max`` only removes positive terms.
    """
    av = _values(a)
    p, lam = params.p, params.lam
    N = len(av)
    if n_max < N:
        raise ParameterError(f"n_max={n_max} is below the sequence length {N}")
    # suffix sums of a_m m**-lam, accumulated from the far end
    suffix = [0.0] * (N + 2)
    acc = Neumaier()
    for m in range(N, 0, -1):
        acc.add(av[m - 1] * float(m) ** -lam)
        suffix[m] = acc.value
    prefix = Neumaier()
    terms = []
    e = p + lam - 3.0
    for n in range(1, N + 1):
        prefix.add(av[n - 1])
        row = float(n) ** -lam * prefix.value + suffix[n + 1]
        if row:
            terms.append(float(n) ** e * row ** p)
    total_a = prefix.value
    if n_max > N and total_a > 0:
        # beyond the support every row equals n**-lam * A
        n = np.arange(N + 1, n_max + 1, dtype=np.float64)
        tail = total_a ** p * n ** (e - lam * p)
        terms.extend(tail.tolist())
    return math.fsum(terms)


@dataclass(frozen=True)
class VerificationReport:
    inequality_id: IneqId
    lhs: float
    rhs: float
    rhs_baseline: Optional[float]
    params: HolderParams
    a: str = ""
    b: str = ""
    n_max: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs

    @property
    def improvement(self) -> Optional[float]:
        if self.rhs_baseline is None:
            return None
        return self.rhs_baseline - self.rhs

    def as_row(self) -> dict:
        return {
            "inequality": self.inequality_id.value,
            "p": self.params.p,
            "q": self.params.q,
            "lambda": self.params.lam,
            "a": self.a,
            "b": self.b,
            "n_max": self.n_max,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rhs_baseline": self.rhs_baseline,
            "improvement": self.improvement,
            "holds": self.holds,
        }


def _n_max(a, n_max: Optional[int]) -> int:
    if n_max is None:
        return max(len(_values(a)), DEFAULT_NMAX)
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    return n_max


def verify_31(a, b, params: HolderParams) -> VerificationReport:
    return VerificationReport(IneqId.I31, kernel_double_sum(a, b, params), rhs_31(a, b, params),
                              rhs_yang13(a, b, params), params, _label(a), _label(b))


def verify_yang13(a, b, params: HolderParams) -> VerificationReport:
    rhs = rhs_yang13(a, b, params)
    return VerificationReport(IneqId.YANG13, kernel_double_sum(a, b, params), rhs, rhs,
                              params, _label(a), _label(b))


def verify_32(a, params: HolderParams, n_max: Optional[int] = None) -> VerificationReport:
    n_max = _n_max(a, n_max)
    return VerificationReport(IneqId.I32, row_sum_lhs(a, params, n_max), rhs_32(a, params),
                              rhs_32_baseline(a, params), params, _label(a), n_max=n_max)


def applicable_corollaries(params: HolderParams) -> List[IneqId]:
    out = [IneqId.I33, IneqId.I34]
    if params.lam == 1.0:
        out += [IneqId.I35, IneqId.I36]
        if params.p == 2.0:
            out += [IneqId.I37, IneqId.I38]
    return out


def verify_corollaries(a, b, params: HolderParams, n_max: Optional[int] = None,
                       which: Optional[Iterable] = None) -> List[VerificationReport]:
    """Reports for the corollary forms that apply to ``params``.

    With ``which`` given, every listed id must apply or
    :class:`ParameterError` is raised.  The corollary (3.3) bound is checked
    never to undercut the theorem bound (3.1).
    """
    ok = applicable_corollaries(params)
    if which is None:
        wanted = ok
    else:
        wanted = [IneqId(w) for w in which]
        for w in wanted:
            if w not in ok:
                if w in (IneqId.I35, IneqId.I36):
                    _require_lambda_one(params, w)
                if w in (IneqId.I37, IneqId.I38):
                    _require_p_two(params, w)
                raise ParameterError(f"{w.value} is not a corollary form")
    n_max = _n_max(a, n_max)
    la, lb = _label(a), _label(b)
    lhs2 = None
    bil = None
    out = []
    for w in wanted:
        if w in BILINEAR:
            if bil is None:
                bil = kernel_double_sum(a, b, params)
            base = rhs_yang13(a, b, params)
            rhs = {IneqId.I33: rhs_33, IneqId.I35: rhs_35, IneqId.I37: rhs_37}[w](a, b, params)
            if w is IneqId.I33 and rhs < rhs_31(a, b, params):
                raise InvariantViolation("corollary bound (3.3) is below theorem bound (3.1)")
            out.append(VerificationReport(w, bil, rhs, base, params, la, lb))
        else:
            if lhs2 is None:
                lhs2 = row_sum_lhs(a, params, n_max)
            rhs = {IneqId.I34: rhs_34, IneqId.I36: rhs_36, IneqId.I38: rhs_38}[w](a, params)
            out.append(VerificationReport(w, lhs2, rhs, rhs_32_baseline(a, params),
                                          params, la, n_max=n_max))
    return out


def verify(ineq, a, b, params: HolderParams, n_max: Optional[int] = None) -> VerificationReport:
    """Dispatch on an inequality id."""
    ineq = IneqId(ineq)
    if ineq is IneqId.I31:
        return verify_31(a, b, params)
    if ineq is IneqId.I32:
        return verify_32(a, params, n_max)
    if ineq is IneqId.YANG13:
        return verify_yang13(a, b, params)
    return verify_corollaries(a, b, params, n_max, which=[ineq])[0]


@dataclass(frozen=True)
class ProbeResult:
    ratio: float
    constant: float
    eps: float
    n_terms: int

    @property
    def gap(self) -> float:
        return self.constant - self.ratio


def probe_family(params: HolderParams, eps: float, n_terms: int):
    """Power sequences whose weighted norms both behave like sum n**(-1-eps)."""
    p, q, lam = params.p, params.q, params.lam
    ea = -((p - 1.0) * (2.0 - lam) + eps) / p
    eb = -((q - 1.0) * (2.0 - lam) + eps) / q
    a = [float(n) ** ea for n in range(1, n_terms + 1)]
    b = [float(n) ** eb for n in range(1, n_terms + 1)]
    return a, b


def sharpness_probe(params: HolderParams, eps: float, n_terms: int) -> ProbeResult:
    """Ratio of the double sum to the plain weighted norms for a near-extremal pair.

    The ratio stays below ``k_lambda`` and creeps toward it as
    ``eps -> 0`` and ``n_terms -> inf``.
    """
    if not eps > 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    if n_terms < 1000:
        raise ParameterError(f"n_terms must be >= 1000, got {n_terms}")
    a, b = probe_family(params, eps, n_terms)
    lhs = kernel_double_sum(a, b, params)
    norm = _weighted_norm(a, params.p, params.lam) * _weighted_norm(b, params.q, params.lam)
    return ProbeResult(lhs / norm, params.k_lambda, eps, n_terms)
