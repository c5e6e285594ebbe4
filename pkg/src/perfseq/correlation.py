"""Periodic auto/cross-correlation: exact multisets and fast numeric FFT path.

The exact path expresses each correlation value theta(tau) as a RootMultiset
(a sum of roots of unity with integer counts) and decides vanishing
symbolically.  The FFT path computes the same values numerically in
O(L log L) and is used for large lengths and as a cross-check; only the
exact path can certify perfection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .roots import RootMultiset
from .sequences import ExponentArray, ExponentSequence

# The exact path is O(L^2); cap it by default so a typo cannot start an
# hours-long run.  Pass max_length=None (or a larger cap) to override.
EXACT_LENGTH_CAP = 20_000

# Off-peak magnitudes at or below this times L count as numerically perfect.
# Only the exact path declares actual perfection.
NUMERIC_PERFECTION_THRESHOLD = 1e-6


@dataclass(frozen=True)
class SequenceVerdict:
    """Outcome of an exact perfection check, with the first failing shift."""

    perfect: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.perfect


@dataclass(frozen=True)
class ArrayVerdict:
    """Outcome of an exact 2D perfection check, with the first failing shift pair."""

    perfect: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.perfect


@dataclass(frozen=True)
class CorrelationProfile:
    """Full periodic autocorrelation: one RootMultiset per shift plus values."""

    order: int
    length: int
    multisets: tuple[RootMultiset, ...]
    values: tuple[complex, ...]

    @property
    def peak(self) -> complex:
        return self.values[0]


def _check_cap(cells: int, cap: int | None, what: str) -> None:
    if cap is not None and cells > cap:
        raise ValueError(
            f"{what} of size {cells} exceeds the exact-path cap {cap}; "
            "pass max_length=None to override"
        )


def _shift_counts(a: np.ndarray, b: np.ndarray, shift: int, order: int) -> tuple[int, ...]:
    diffs = (a - np.roll(b, -shift)) % order
    return tuple(np.bincount(diffs, minlength=order).tolist())


def cross_correlation_exact(
    a: ExponentSequence, b: ExponentSequence, shift: int
) -> RootMultiset:
    """theta_{a,b}(shift) as an exact multiset: one term per position i.

    Each term contributes exponent (a[i] - b[(i+shift) mod L]) mod N; the
    shift itself is reduced mod L, so negative shifts are fine.
    """
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    counts = _shift_counts(
        a.exponent_array(), b.exponent_array(), shift % a.length, a.order
    )
    return RootMultiset(a.order, counts)


def autocorrelation_profile_exact(
    s: ExponentSequence, *, max_length: int | None = EXACT_LENGTH_CAP
) -> CorrelationProfile:
    """Exact theta_s(tau) for every shift tau in [0, L), with numeric values."""
    _check_cap(s.length, max_length, "sequence")
    exps = s.exponent_array()
    multisets = []
    values = []
    for tau in range(s.length):
        ms = RootMultiset(s.order, _shift_counts(exps, exps, tau, s.order))
        multisets.append(ms)
        values.append(ms.evaluate())
    return CorrelationProfile(s.order, s.length, tuple(multisets), tuple(values))


def is_perfect_exact(
    s: ExponentSequence, *, max_length: int | None = EXACT_LENGTH_CAP
) -> SequenceVerdict:
    """Certify that every off-peak autocorrelation vanishes exactly.

    Returns the smallest failing shift as witness when the sequence is not
    perfect.
    """
    _check_cap(s.length, max_length, "sequence")
    exps = s.exponent_array()
    for tau in range(1, s.length):
        ms = RootMultiset(s.order, _shift_counts(exps, exps, tau, s.order))
        if not ms.is_zero():
            return SequenceVerdict(False, tau)
    return SequenceVerdict(True, None)


def autocorrelation_fft(s: ExponentSequence) -> np.ndarray:
    """theta_s(tau) for all tau via the power spectrum, in O(L log L).

    Uses conj(ifft(|fft(z)|^2)), which equals sum_i z_i * conj(z_{i+tau}).
    Error is bounded by a few machine epsilons times L per value.
    """
    z = s.values()
    spectrum = np.fft.fft(z)
    return np.conj(np.fft.ifft(np.abs(spectrum) ** 2))


def max_offpeak_magnitude(values: np.ndarray) -> float:
    """Largest |theta(tau)| over tau != 0; zero for length-1 input."""
    values = np.asarray(values)
    if values.size == 0:
        raise ValueError("need at least one correlation value")
    if values.size == 1:
        return 0.0
    return float(np.max(np.abs(values[1:])))


def is_numerically_perfect(values: np.ndarray, length: int) -> bool:
    """Advisory verdict: all off-peak magnitudes within the float-noise budget."""
    return max_offpeak_magnitude(values) <= NUMERIC_PERFECTION_THRESHOLD * length


def array_autocorrelation_2d(
    arr: ExponentArray, shift_rows: int, shift_cols: int
) -> RootMultiset:
    """Exact 2D periodic autocorrelation value at shift (shift_rows, shift_cols)."""
    mat = arr.exponent_matrix()
    rolled = np.roll(mat, (-shift_rows % arr.rows, -shift_cols % arr.cols), axis=(0, 1))
    diffs = (mat - rolled) % arr.order
    counts = tuple(np.bincount(diffs.ravel(), minlength=arr.order).tolist())
    return RootMultiset(arr.order, counts)


def is_perfect_array(
    arr: ExponentArray, *, max_cells: int | None = EXACT_LENGTH_CAP
) -> ArrayVerdict:
    """Certify that every off-peak 2D autocorrelation of the array vanishes."""
    _check_cap(arr.rows * arr.cols, max_cells, "array")
    mat = arr.exponent_matrix()
    for t1 in range(arr.rows):
        rolled_rows = np.roll(mat, -t1, axis=0)
        for t2 in range(arr.cols):
            if t1 == 0 and t2 == 0:
                continue
            diffs = (mat - np.roll(rolled_rows, -t2, axis=1)) % arr.order
            counts = tuple(np.bincount(diffs.ravel(), minlength=arr.order).tolist())
            if not RootMultiset(arr.order, counts).is_zero():
                return ArrayVerdict(False, (t1, t2))
    return ArrayVerdict(True, None)
