"""Truncated Laurent series in descending powers of xi.

A series is a finite sum  sum_s c_s xi^(-s)  with natural exponents s, plus a
truncation marker ``valid_to``: coefficients at exponents <= valid_to are
trusted, anything beyond is truncation noise and is never stored.  Exact
inputs (monomials, constants, the zero series) carry valid_to = infinity.

Only decaying-or-constant terms are representable; positive powers of xi are
rejected at construction, which makes the tail-limit requirements of the
coefficient recurrence hold by construction.
"""

from __future__ import annotations

import math
from typing import Iterator, Mapping

_SCALARS = (int, float, complex)


class NonIntegrableTerm(ValueError):
    """A tail integral was requested for a term decaying like xi^0 or xi^-1."""


class ZeroPointError(ValueError):
    """Evaluation at xi = 0 is outside the domain of every series."""


class LaurentSeries:
    """Immutable truncated Laurent series in descending powers of xi."""

    __slots__ = ("_terms", "_valid_to")

    def __init__(self, terms: Mapping[int, complex], valid_to: float = math.inf):
        if valid_to != math.inf:
            if valid_to != int(valid_to):
                raise ValueError(f"valid_to must be integral or inf, got {valid_to}")
            valid_to = int(valid_to)
            if valid_to < 0:
                raise ValueError(f"valid_to must be nonnegative, got {valid_to}")
        clean = {}
        for s, c in terms.items():
            if s < 0:
                raise ValueError(
                    f"positive power xi^{-s} is not representable (exponent {s})"
                )
            c = complex(c)
            if c != 0 and s <= valid_to:
                clean[int(s)] = c
        self._terms = clean
        self._valid_to = valid_to

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentSeries":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentSeries":
        return cls({0: 1.0})

    @classmethod
    def monomial(cls, exponent: int, coeff: complex = 1.0,
                 valid_to: float = math.inf) -> "LaurentSeries":
        """The single term coeff * xi^(-exponent)."""
        return cls({exponent: coeff}, valid_to)

    # -- inspection --------------------------------------------------------

    @property
    def valid_to(self) -> float:
        return self._valid_to

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, s: int) -> complex:
        return self._terms.get(s, 0.0 + 0.0j)

    def min_exponent(self) -> float:
        """Decay order: smallest stored exponent; +inf for the zero series."""
        return min(self._terms) if self._terms else math.inf

    def max_exponent(self) -> float:
        return max(self._terms) if self._terms else -math.inf

    def items(self) -> Iterator[tuple[int, complex]]:
        return iter(sorted(self._terms.items()))

    def truncated(self, valid_to: float) -> "LaurentSeries":
        """Copy with valid_to lowered to the given bound (never raised)."""
        return LaurentSeries(self._terms, min(self._valid_to, valid_to))

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentSeries | None":
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, _SCALARS):
            return LaurentSeries({0: other})
        return None

    def __add__(self, other) -> "LaurentSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for s, c in rhs._terms.items():
            terms[s] = terms.get(s, 0.0) + c
        return LaurentSeries(terms, min(self._valid_to, rhs._valid_to))

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({s: -c for s, c in self._terms.items()}, self._valid_to)

    def __sub__(self, other) -> "LaurentSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "LaurentSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "LaurentSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return LaurentSeries.zero()
        valid_to = min(
            self._valid_to + rhs.min_exponent(),
            rhs._valid_to + self.min_exponent(),
        )
        terms: dict[int, complex] = {}
        for s1, c1 in self._terms.items():
            for s2, c2 in rhs._terms.items():
                s = s1 + s2
                if s <= valid_to:
                    terms[s] = terms.get(s, 0.0) + c1 * c2
        return LaurentSeries(terms, valid_to)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms and self._valid_to == rhs._valid_to

    def __hash__(self):
        return hash((frozenset(self._terms.items()), self._valid_to))

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            body = " + ".join(
                f"({c:.6g})*xi^-{s}" for s, c in sorted(self._terms.items())
            )
        vt = "inf" if self._valid_to == math.inf else str(self._valid_to)
        return f"LaurentSeries({body}, valid_to={vt})"

    # -- calculus ----------------------------------------------------------

    def differentiate(self) -> "LaurentSeries":
        """d/dxi: c_s xi^-s -> -s c_s xi^-(s+1); valid_to grows by one."""
        terms = {s + 1: -s * c for s, c in self._terms.items() if s != 0}
        return LaurentSeries(terms, self._valid_to + 1)

    def ray_tail_integral(self) -> "LaurentSeries":
        """Integral from xi to infinity along any ray, term by term.

        Requires every term to decay at least like xi^-2; the antiderivative
        is single-valued and vanishes at infinity, so the result does not
        depend on the ray direction:  c_s xi^-s -> c_s/(s-1) xi^-(s-1).
        """
        bad = [s for s in self._terms if s <= 1]
        if bad:
            raise NonIntegrableTerm(
                f"tail integral diverges for exponents {sorted(bad)} (need s >= 2)"
            )
        terms = {s - 1: c / (s - 1) for s, c in self._terms.items()}
        return LaurentSeries(terms, max(self._valid_to - 1, 0))

    def evaluate(self, xi: complex) -> complex:
        """Numeric value at xi != 0, summed small-to-large for stability."""
        if xi == 0:
            raise ZeroPointError("Laurent series cannot be evaluated at xi = 0")
        total = 0.0 + 0.0j
        for s in sorted(self._terms, reverse=True):
            total += self._terms[s] * xi ** (-s)
        return total

    # -- persistence ---------------------------------------------------------

    def to_json(self) -> dict:
        """JSON object {"valid_to": S-or-null, "terms": [{"exp","re","im"},...]}."""
        vt = None if self._valid_to == math.inf else self._valid_to
        return {
            "valid_to": vt,
            "terms": [
                {"exp": s, "re": c.real, "im": c.imag}
                for s, c in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentSeries":
        vt = obj.get("valid_to")
        valid_to = math.inf if vt is None else vt
        terms = {t["exp"]: complex(t["re"], t["im"]) for t in obj["terms"]}
        return cls(terms, valid_to)
