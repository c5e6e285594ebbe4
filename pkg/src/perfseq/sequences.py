"""Sequence and array types plus the perfect-sequence construction families.

Sequences over N-th roots of unity are stored as integer exponents mod N,
which keeps every construction exact.  The families provided:

* blake-tirkel: length 4*m*n^(k+1) over 2*m*n^k roots of unity, built by
  enumerating row-by-row the (2*m*n^(k+1) x 2) array with entries
  w^floor(i*(i+j)/n).
* frank: length n^2 over n roots of unity, exponent q*r at position q*n+r.
* chu: length n; order n with exponents i*(i+1)/2 for odd n, order 2n with
  exponents i^2 for even n.
* milewski: length m^(2k+1), built from a chu(m) seed lifted to order
  m^(k+1) (odd m) or 2*m^(k+1) (even m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Exponent arithmetic downstream runs on int64 arrays; reject parameter sets
# whose i*(i+j) intermediates could not be formed there.
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class ExponentSequence:
    """A sequence over N-th roots of unity, stored as exponents in [0, N)."""

    order: int
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"root order must be >= 1, got {self.order}")
        if not self.exps:
            raise ValueError("sequence must have length >= 1")
        for e in self.exps:
            if not 0 <= e < self.order:
                raise ValueError(f"exponent {e} outside [0, {self.order})")

    @property
    def length(self) -> int:
        return len(self.exps)

    def exponent_array(self) -> np.ndarray:
        """Exponents as an int64 vector."""
        return np.asarray(self.exps, dtype=np.int64)

    def values(self) -> np.ndarray:
        """Complex unit samples exp(2*pi*i*e/N)."""
        return np.exp(2j * np.pi * self.exponent_array() / self.order)


@dataclass(frozen=True)
class ExponentArray:
    """A rows x cols array over N-th roots of unity, row-major exponents."""

    order: int
    rows: int
    cols: int
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"root order must be >= 1, got {self.order}")
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"array shape must be positive, got {self.rows}x{self.cols}")
        if len(self.exps) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} exponents, got {len(self.exps)}"
            )
        for e in self.exps:
            if not 0 <= e < self.order:
                raise ValueError(f"exponent {e} outside [0, {self.order})")

    def at(self, i: int, j: int) -> int:
        return self.exps[i * self.cols + j]

    def column(self, j: int) -> tuple[int, ...]:
        if not 0 <= j < self.cols:
            raise ValueError(f"column {j} outside [0, {self.cols})")
        return self.exps[j :: self.cols]

    def exponent_matrix(self) -> np.ndarray:
        """Exponents as an int64 matrix of shape (rows, cols)."""
        return np.asarray(self.exps, dtype=np.int64).reshape(self.rows, self.cols)

    def row_major_sequence(self) -> ExponentSequence:
        """The sequence obtained by enumerating the array row by row."""
        return ExponentSequence(self.order, self.exps)


@dataclass(frozen=True)
class ConstructionParams:
    """Validated (n, m, k) parameters for the blake-tirkel family.

    Derived quantities: root order N = 2*m*n^k, array rows R = 2*m*n^(k+1),
    sequence length L = 2*R = 4*m*n^(k+1).
    """

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        for name, value in (("n", self.n), ("m", self.m), ("k", self.k)):
            if value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        r = self.rows
        if r * (r + 1) > _INT64_MAX:
            raise ValueError(
                f"parameters (n={self.n}, m={self.m}, k={self.k}) give {r} rows; "
                "exponent intermediates i*(i+j) would not fit 64-bit integers"
            )

    @property
    def order(self) -> int:
        return 2 * self.m * self.n**self.k

    @property
    def rows(self) -> int:
        return 2 * self.m * self.n ** (self.k + 1)

    @property
    def length(self) -> int:
        return 2 * self.rows

    @property
    def degenerate_n(self) -> bool:
        """True for n = 1, where the family's inner vanishing sum collapses.

        Such outputs are still verified perfect instance-by-instance by the
        exact checker, but fall outside the general argument that covers
        n >= 2.
        """
        return self.n == 1


def validate_params(n: int, m: int, k: int) -> ConstructionParams:
    """Validate (n, m, k) and compute the derived order/rows/length."""
    return ConstructionParams(n, m, k)


def blake_tirkel_array(params: ConstructionParams) -> ExponentArray:
    """The R x 2 array with entries w^floor(i*(i+j)/n), w of order 2*m*n^k."""
    n, order, rows = params.n, params.order, params.rows
    exps = []
    for i in range(rows):
        exps.append((i * i // n) % order)
        exps.append((i * (i + 1) // n) % order)
    return ExponentArray(order, rows, 2, tuple(exps))


def blake_tirkel_sequence(params: ConstructionParams) -> ExponentSequence:
    """Row-by-row enumeration of the blake-tirkel array: s[2i+j] = A[i][j]."""
    return blake_tirkel_array(params).row_major_sequence()


def frank(n: int) -> ExponentSequence:
    """Frank sequence of length n^2 over n roots of unity: exps[q*n+r] = q*r."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    exps = tuple((q * r) % n for q in range(n) for r in range(n))
    return ExponentSequence(n, exps)


def chu(n: int) -> ExponentSequence:
    """Chu sequence of length n: order n for odd n, order 2n for even n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return ExponentSequence(n, tuple((i * (i + 1) // 2) % n for i in range(n)))
    return ExponentSequence(2 * n, tuple((i * i) % (2 * n) for i in range(n)))


def milewski(m: int, k: int) -> ExponentSequence:
    """Milewski sequence of length m^(2k+1) built from a chu(m) seed.

    The seed's phases are lifted to the target order (2*m^(k+1) when the
    even-m seed needs 2m phases, m^(k+1) otherwise) and twisted by i*j
    across the m^(k+1) x m^k layout.  Perfectness of the result is certified
    by the exact autocorrelation checker, not assumed from the formula.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    seed = chu(m)
    order = seed.order * m**k
    lift = order // seed.order
    twist = order // m ** (k + 1)
    block = m**k
    exps = []
    for i in range(m ** (k + 1)):
        base = seed.exps[i % m] * lift
        for j in range(block):
            exps.append((base + i * j * twist) % order)
    return ExponentSequence(order, tuple(exps))


def phase_efficiency(s: ExponentSequence) -> Fraction:
    """Ratio of sequence length to the number of available phases, exact."""
    return Fraction(s.length, s.order)
