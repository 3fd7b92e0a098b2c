"""Deterministic nonnegative test sequences.

Spec strings (as accepted by the CLI)::

    unit:N             a_n = 1,        n = 1..N
    powerlaw:t:N       a_n = n**t
    random:seed:N      uniform [0, 1) from Philox4x64 keyed by seed
    file:path          one nonnegative decimal per line, '#' starts a comment
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence as Seq, Tuple

import numpy as np

from .errors import IngestionError, ParameterError


class SeqKind(str, Enum):
    POWERLAW = "powerlaw"
    RANDOM = "random"
    UNIT_PREFIX = "unit"
    FILE = "file"


@dataclass(frozen=True)
class Sequence:
    """Finite nonnegative sequence a_1..a_N (stored 0-based)."""

    values: Tuple[float, ...]
    label: str = ""

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ParameterError("sequence must have at least one term")
        for i, v in enumerate(vals, start=1):
            if not math.isfinite(v) or v < 0:
                raise ParameterError(f"a_{i} = {v!r} is not a finite nonnegative number")
        if not any(v > 0 for v in vals):
            raise ParameterError("sequence must have at least one positive term")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def support(self) -> int:
        """Largest index n with a_n > 0."""
        return max(i for i, v in enumerate(self.values, start=1) if v > 0)

    def scaled(self, c: float) -> "Sequence":
        return Sequence(tuple(c * v for v in self.values), self.label and f"{c:g}*{self.label}")

    def padded(self, n: int) -> "Sequence":
        extra = max(0, n - len(self.values))
        return Sequence(self.values + (0.0,) * extra, self.label)


@dataclass(frozen=True)
class SeqSpec:
    kind: SeqKind
    length: int = 0
    exponent: float = 0.0
    seed: int = 0
    path: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SeqKind(self.kind))
        if self.kind is not SeqKind.FILE and self.length < 1:
            raise ParameterError(f"sequence length must be >= 1, got {self.length}")
        if self.kind is SeqKind.RANDOM and not 0 <= self.seed < 2 ** 64:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.kind is SeqKind.FILE and not self.path:
            raise ParameterError("file sequence needs a path")

    def __str__(self) -> str:
        if self.kind is SeqKind.UNIT_PREFIX:
            return f"unit:{self.length}"
        if self.kind is SeqKind.POWERLAW:
            return f"powerlaw:{self.exponent:g}:{self.length}"
        if self.kind is SeqKind.RANDOM:
            return f"random:{self.seed}:{self.length}"
        return f"file:{self.path}"


def parse_spec(text: str) -> SeqSpec:
    kind, _, rest = text.partition(":")
    try:
        if kind == "unit":
            return SeqSpec(SeqKind.UNIT_PREFIX, length=int(rest))
        if kind == "powerlaw":
            t, n = rest.split(":")
            return SeqSpec(SeqKind.POWERLAW, length=int(n), exponent=float(t))
        if kind == "random":
            seed, n = rest.split(":")
            return SeqSpec(SeqKind.RANDOM, length=int(n), seed=int(seed))
        if kind == "file":
            return SeqSpec(SeqKind.FILE, path=rest)
    except ValueError as exc:
        raise ParameterError(f"bad sequence spec {text!r}: {exc}") from None
    raise ParameterError(
        f"bad sequence spec {text!r}; expected unit:N, powerlaw:t:N, random:seed:N or file:path")


def read_sequence_file(path) -> Tuple[float, ...]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from None
    vals = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        try:
            v = float(entry)
        except ValueError:
            raise IngestionError(f"{path}:{lineno}: not a number: {entry!r}") from None
        if not math.isfinite(v) or v < 0:
            raise IngestionError(f"{path}:{lineno}: entry must be finite and >= 0, got {entry!r}")
        vals.append(v)
    if not vals:
        raise IngestionError(f"{path}: no entries")
    return tuple(vals)


def random_uniform(seed: int, n: int) -> np.ndarray:
    """n doubles in [0, 1) from the counter-based Philox4x64-10 generator."""
    return np.random.Generator(np.random.Philox(seed)).random(n)


def generate(spec) -> Sequence:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    n = spec.length
    if spec.kind is SeqKind.UNIT_PREFIX:
        vals: Seq[float] = (1.0,) * n
    elif spec.kind is SeqKind.POWERLAW:
        vals = tuple(float(i) ** spec.exponent for i in range(1, n + 1))
    elif spec.kind is SeqKind.RANDOM:
        vals = tuple(random_uniform(spec.seed, n).tolist())
    else:
        vals = read_sequence_file(spec.path)
    try:
        return Sequence(vals, str(spec))
    except ParameterError as exc:
        raise IngestionError(f"{spec}: {exc}") from None
