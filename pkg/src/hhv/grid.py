"""Parameter grids for sweeps."""
from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .errors import ParameterError
from .weights import HolderParams

DEFAULT_P = (1.2, 1.5, 2.0, 3.0, 4.0)
DEFAULT_STEP = 0.1
DEFAULT_M_MAX = 500


def lambda_values(p: float, step: float = DEFAULT_STEP) -> List[float]:
    """lam = 2 - min(p, q) + k*step for k >= 1 up to 2, plus 2 itself."""
    q = p / (p - 1.0)
    lower = 2.0 - min(p, q)
    out = []
    k = 1
    while True:
        lam = round(lower + k * step, 12)
        if lam > 2.0:
            break
        out.append(lam)
        k += 1
    if not out or out[-1] != 2.0:
        out.append(2.0)
    return out


def build_grid(p_values: Iterable[float] = DEFAULT_P,
               lambdas: Optional[Iterable[float]] = None,
               step: float = DEFAULT_STEP) -> Tuple[List[HolderParams], List[Tuple[float, float, str]]]:
    """Admissible parameter sets plus ``(p, lam, reason)`` for rejected pairs."""
    good, skipped = [], []
    for p in p_values:
        if not p > 1:
            skipped.append((p, float("nan"), f"p={p} must exceed 1"))
            continue
        lams = lambda_values(p, step) if lambdas is None else list(lambdas)
        for lam in lams:
            try:
                good.append(HolderParams(p, lam))
            except ParameterError as exc:
                skipped.append((p, lam, str(exc)))
    return good, skipped


def default_grid() -> List[HolderParams]:
    return build_grid()[0]
