"""The sequence a_n of positive roots of (1+x)^n = 1 + 2nx and its limit.

a_n / n converges to the positive root `a` of e^a = 1 + 2a; the sequence
controls the guaranteed radius of analyticity of the Borel transforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class FrakAEntry:
    n: int
    value: float
    residual: float  # |(1+x)^n - (1+2nx)| / (1+2nx) at the returned root

    @property
    def lower_bound(self) -> float:
        return limit_constant() / self.n

    @property
    def upper_bound(self) -> float:
        return 2.0 / (self.n - 1)


def _defect(n: int, x: float) -> float:
    # (1+x)^n - (1+2nx), written via expm1/log1p to stay accurate near the root
    return math.expm1(n * math.log1p(x)) - 2.0 * n * x


def _defect_prime(n: int, x: float) -> float:
    return n * (math.exp((n - 1) * math.log1p(x)) - 2.0)


@lru_cache(maxsize=None)
def frak_a(n: int) -> FrakAEntry:
    """Positive root of (1+x)^n = 1 + 2nx, bracketed on [a/n, 2/(n-1)].

    The bracket endpoints come with guaranteed signs (defect <= 0 on the
    left, >= 0 on the right), so 20 bisection steps followed by a short
    Newton polish give the root to full double precision.
    """
    if n < 2:
        raise ValueError(f"frak_a is defined for n >= 2, got {n}")
    lo = limit_constant() / n
    hi = 2.0 / (n - 1)
    if _defect(n, lo) > 0:
        lo = 0.5 * lo  # guard against rounding at the analytic endpoint
    x = 0.5 * (lo + hi)
    for _ in range(20):
        if _defect(n, x) <= 0:
            lo = x
        else:
            hi = x
        x = 0.5 * (lo + hi)
    for _ in range(5):
        fp = _defect_prime(n, x)
        if fp == 0.0:
            break
        step = _defect(n, x) / fp
        x -= step
        if abs(step) <= 1e-17 * abs(x):
            break
    x = min(max(x, 0.0), 2.0 / (n - 1))
    residual = abs(_defect(n, x)) / (1.0 + 2.0 * n * x)
    return FrakAEntry(n=n, value=x, residual=residual)


@lru_cache(maxsize=None)
def limit_constant() -> float:
    """The positive root a = 1.2564312086... of e^a = 1 + 2a."""
    lo, hi = 1.0, 2.0  # e - 3 < 0 and e^2 - 5 > 0
    x = 0.5 * (lo + hi)
    for _ in range(20):
        if math.exp(x) - (1.0 + 2.0 * x) <= 0:
            lo = x
        else:
            hi = x
        x = 0.5 * (lo + hi)
    for _ in range(5):
        f = math.exp(x) - (1.0 + 2.0 * x)
        fp = math.exp(x) - 2.0
        step = f / fp
        x -= step
        if abs(step) <= 1e-17 * abs(x):
            break
    return x
