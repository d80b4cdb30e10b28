"""Exact combinatorial kernels: binomials, Pochhammer symbols, Bell polynomials,
and unsigned Stirling numbers of the first kind.

The Bell polynomial routines are generic over any commutative algebra whose
elements support ``+``, ``*`` and multiplication by Python ints, so the same
recurrences serve plain scalars, ``fractions.Fraction`` and Laurent series.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence, TypeVar

T = TypeVar("T")


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k) for 0 <= k <= n."""
    if k < 0 or n < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise ValueError(f"binomial requires k <= n, got ({n}, {k})")
    return math.comb(n, k)


def pochhammer(w, m: int):
    """Rising factorial w (w+1) ... (w+m-1); the empty product (m=0) is 1.

    Works for ints, Fractions, floats and complex alike.
    """
    if m < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {m}")
    result = 1
    for i in range(m):
        result = result * (w + i)
    return result


class InsufficientArguments(ValueError):
    """Raised when a Bell polynomial is given too short an argument list."""


def partial_bell(p: int, r: int, xs: Sequence[T]):
    """Partial exponential Bell polynomial B_{p,r}(x_1, ..., x_{p-r+1}).

    Computed by the triangular recurrence

        B_{p+1,r+1} = sum_q C(p, q) x_{q+1} B_{p-q,r}

    with B_{0,0} = 1, B_{p,0} = 0 for p >= 1 and B_{0,r} = 0 for r >= 1.
    Scalar 0/1 results are returned as plain ints; they combine with any
    algebra that supports int scalars.
    """
    if p < 0 or r < 0:
        raise ValueError(f"B_(p,r) needs nonnegative indices, got ({p}, {r})")
    if p == 0:
        return 1 if r == 0 else 0
    if r == 0 or r > p:
        return 0
    needed = p - r + 1
    if len(xs) < needed:
        raise InsufficientArguments(
            f"B_({p},{r}) needs {needed} arguments, got {len(xs)}"
        )
    # row[i] holds B_{i+k, k} for the current k; build rows k = 1 .. r.
    # B_{p,1} = x_p seeds the first row.
    row = {q: xs[q - 1] for q in range(1, p - r + 2)}
    for k in range(1, r):
        new_row = {}
        for pp in range(k + 1, p - r + k + 2):
            # B_{pp, k+1} = sum_{q=0}^{pp-1-k} C(pp-1, q) x_{q+1} B_{pp-1-q, k}
            acc = None
            for q in range(0, pp - 1 - k + 1):
                term = binomial(pp - 1, q) * (xs[q] * row[pp - 1 - q])
                acc = term if acc is None else acc + term
            new_row[pp] = acc
        row = new_row
    return row[p]


def complete_bell(p: int, xs: Sequence[T]):
    """Complete exponential Bell polynomial B_p(x_1, ..., x_p), B_0 = 1.

    Uses the recurrence B_{p+1} = sum_q C(p, q) x_{q+1} B_{p-q}.
    """
    if p < 0:
        raise ValueError(f"B_p needs a nonnegative index, got {p}")
    if p == 0:
        return 1
    if len(xs) < p:
        raise InsufficientArguments(f"B_{p} needs {p} arguments, got {len(xs)}")
    values = [1]  # values[i] = B_i
    for i in range(p):
        acc = None
        for q in range(i + 1):
            term = binomial(i, q) * (xs[q] * values[i - q])
            acc = term if acc is None else acc + term
        values.append(acc)
    return values[p]


@lru_cache(maxsize=None)
def stirling_first_unsigned(m: int, r: int) -> int:
    """Unsigned Stirling number of the first kind |s(m, r)|.

    Recurrence |s(m+1, r)| = |s(m, r-1)| + m |s(m, r)| with |s(0,0)| = 1.
    """
    if m < 0 or r < 0:
        raise ValueError(f"Stirling indices must be nonnegative, got ({m}, {r})")
    if r > m:
        raise ValueError(f"Stirling number needs r <= m, got ({m}, {r})")
    if m == 0:
        return 1
    if r == 0:
        return 0
    return stirling_first_unsigned(m - 1, r - 1) + (m - 1) * stirling_first_unsigned(
        m - 1, r
    )
