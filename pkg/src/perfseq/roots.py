"""Exact arithmetic with sums of roots of unity.

A sum  sum_e c_e * w^e  with w = exp(2*pi*i/N) is stored losslessly as the
integer count vector (c_0, ..., c_{N-1}).  Deciding whether such a sum is
exactly zero is done symbolically: the sum vanishes iff the N-th cyclotomic
polynomial divides  sum_e c_e x^e  over the integers.  Floating-point
evaluation is provided as an advisory cross-check only; it never decides
zeroness.

All exponents are canonicalized into [0, N) with true (non-negative) modulus
before any arithmetic, so negative exponents are always safe to pass in.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

# Sanity cap for cyclotomic-polynomial computation.  Desk-scale parameters
# keep orders far below this; the cap only blocks accidental huge requests.
MAX_CYCLOTOMIC_ORDER = 10**6


def root_value(exponent: int, order: int) -> complex:
    """w^exponent for w = exp(2*pi*i/order), with the exponent reduced mod order."""
    if order < 1:
        raise ValueError(f"root order must be >= 1, got {order}")
    return cmath.exp(2j * cmath.pi * (exponent % order) / order)


@functools.lru_cache(maxsize=None)
def _unit_roots(order: int) -> np.ndarray:
    roots = np.exp(2j * np.pi * np.arange(order) / order)
    roots.setflags(write=False)
    return roots


class IntPolynomial:
    """Dense polynomial over the integers, coefficients in ascending degree.

    Trailing zero coefficients are trimmed on construction, so the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def divmod_exact(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Classical long division by a monic divisor; exact over the integers."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        d = divisor.degree
        rem = list(self.coeffs)
        if len(rem) <= d:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - d)
        # Nonzero tail terms of the divisor; cyclotomics are sparse, so this
        # keeps the inner loop short.
        tail = [(i, c) for i, c in enumerate(divisor.coeffs[:-1]) if c]
        for top in range(len(rem) - 1, d - 1, -1):
            lead = rem[top]
            if lead:
                quot[top - d] = lead
                rem[top] = 0
                base = top - d
                for i, c in tail:
                    rem[base + i] -= lead * c
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def evaluate(self, x: complex) -> complex:
        """Horner evaluation at a complex point."""
        acc = 0 + 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic(order: int) -> IntPolynomial:
    """The cyclotomic polynomial Phi_order with exact integer coefficients.

    Computed by the divide-down recurrence
    Phi_N(x) = (x^N - 1) / prod(Phi_d(x) for d | N, d < N)
    using exact monic long division.  Results are cached.
    """
    if order < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {order}")
    if order > MAX_CYCLOTOMIC_ORDER:
        raise ValueError(f"cyclotomic order {order} exceeds bound {MAX_CYCLOTOMIC_ORDER}")
    poly = IntPolynomial([-1] + [0] * (order - 1) + [1])
    for d in _divisors(order):
        if d == order:
            continue
        poly, rem = poly.divmod_exact(cyclotomic(d))
        if not rem.is_zero:
            raise ArithmeticError(f"inexact division in cyclotomic({order})")
    return poly


@dataclass(frozen=True)
class RootMultiset:
    """A signed multiset of N-th roots of unity: counts[e] copies of w^e.

    Represents the value sum_e counts[e] * w^e exactly.  The representation
    is not unique as a value (w^e == w^(e mod N)); exponents are always
    stored canonically in [0, N).
    """

    order: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"root order must be >= 1, got {self.order}")
        if len(self.counts) != self.order:
            raise ValueError(
                f"counts must have exactly order={self.order} entries, got {len(self.counts)}"
            )

    @classmethod
    def zero(cls, order: int) -> "RootMultiset":
        return cls(order, (0,) * order)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], order: int) -> "RootMultiset":
        """Tally w^e over the given exponents (reduced mod order)."""
        counts = [0] * order
        for e in exponents:
            counts[e % order] += 1
        return cls(order, tuple(counts))

    @classmethod
    def from_counts(cls, counts: Iterable[int], order: int) -> "RootMultiset":
        return cls(order, tuple(counts))

    def total(self) -> int:
        """Sum of all counts (number of terms, with multiplicity and sign)."""
        return sum(self.counts)

    def __add__(self, other: "RootMultiset") -> "RootMultiset":
        if not isinstance(other, RootMultiset):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")
        return RootMultiset(self.order, tuple(a + b for a, b in zip(self.counts, other.counts)))

    def conjugate(self) -> "RootMultiset":
        """The complex conjugate: every exponent e maps to -e mod N."""
        n = self.order
        return RootMultiset(n, tuple(self.counts[(-e) % n] for e in range(n)))

    def is_zero(self) -> bool:
        """Exact zero test: Phi_N divides sum_e counts[e] x^e over the integers."""
        poly = IntPolynomial(self.counts)
        if poly.is_zero:
            return True
        _, rem = poly.divmod_exact(cyclotomic(self.order))
        return rem.is_zero

    def evaluate(self) -> complex:
        """Advisory numeric value sum_e counts[e] * w^e in double precision.

        Rounding error is at most a few machine epsilons times sum(|counts|).
        """
        return complex(np.dot(self.counts, _unit_roots(self.order)))


def multiset_add(a: RootMultiset, b: RootMultiset) -> RootMultiset:
    """Componentwise sum; both multisets must share the same root order."""
    return a + b


def is_zero_sum(ms: RootMultiset) -> bool:
    """True iff the represented sum of roots of unity is exactly zero."""
    return ms.is_zero()


def evaluate(ms: RootMultiset) -> complex:
    """Numeric (double precision) value of the represented sum."""
    return ms.evaluate()
