"""The array orthogonality property (AOP): a sufficient condition for perfection.

A length-L sequence folded row-major into an (L/d) x d array has the AOP for
divisor d when

1. every pair of distinct columns has zero periodic cross-correlation at
   every shift (including shift 0), and
2. the columnwise sum of periodic autocorrelations vanishes at every
   non-zero shift.

Any sequence whose fold has the AOP is perfect.  The checks here are exact:
each correlation value is a RootMultiset and vanishing is decided
symbolically.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .correlation import is_perfect_exact
from .roots import RootMultiset
from .sequences import ExponentArray, ExponentSequence


@dataclass(frozen=True)
class ConditionVerdict:
    """One AOP condition: pass/fail plus the first failing witness."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class AopReport:
    """Verdicts for both AOP conditions on a folded sequence.

    sequence_perfect records the independent exact perfection verdict of the
    unfolded sequence; overall AOP may never hold while that is false.
    """

    divisor: int
    condition1: ConditionVerdict
    condition2: ConditionVerdict
    sequence_perfect: bool

    @property
    def overall(self) -> bool:
        return self.condition1.holds and self.condition2.holds


def fold(s: ExponentSequence, divisor: int) -> ExponentArray:
    """Arrange s row-major into an (L/divisor) x divisor array."""
    if divisor < 1:
        raise ValueError(f"divisor must be >= 1, got {divisor}")
    if s.length % divisor:
        raise ValueError(f"divisor {divisor} does not divide length {s.length}")
    return ExponentArray(s.order, s.length // divisor, divisor, s.exps)


def column_cross_correlation(
    arr: ExponentArray, j1: int, j2: int, shift: int
) -> RootMultiset:
    """Exact periodic cross-correlation of columns j1 and j2 at the given shift."""
    for j in (j1, j2):
        if not 0 <= j < arr.cols:
            raise ValueError(f"column {j} outside [0, {arr.cols})")
    a = np.asarray(arr.column(j1), dtype=np.int64)
    b = np.asarray(arr.column(j2), dtype=np.int64)
    diffs = (a - np.roll(b, -(shift % arr.rows))) % arr.order
    return RootMultiset(
        arr.order, tuple(np.bincount(diffs, minlength=arr.order).tolist())
    )


def aop_condition1(arr: ExponentArray) -> ConditionVerdict:
    """All distinct column pairs orthogonal at every shift, including shift 0.

    The witness is the lexicographically first failing (j1, j2, shift).
    """
    if arr.cols < 2:
        raise ValueError("condition 1 needs at least two columns")
    cols = [np.asarray(arr.column(j), dtype=np.int64) for j in range(arr.cols)]
    for j1 in range(arr.cols):
        for j2 in range(arr.cols):
            if j1 == j2:
                continue
            for shift in range(arr.rows):
                diffs = (cols[j1] - np.roll(cols[j2], -shift)) % arr.order
                counts = tuple(np.bincount(diffs, minlength=arr.order).tolist())
                if not RootMultiset(arr.order, counts).is_zero():
                    return ConditionVerdict(False, (j1, j2, shift))
    return ConditionVerdict(True, None)


def aop_condition2(arr: ExponentArray) -> ConditionVerdict:
    """Summed column autocorrelations vanish at every non-zero shift.

    The witness is the smallest failing shift.
    """
    cols = [np.asarray(arr.column(j), dtype=np.int64) for j in range(arr.cols)]
    for shift in range(1, arr.rows):
        summed = functools.reduce(
            lambda acc, c: acc
            + np.bincount((c - np.roll(c, -shift)) % arr.order, minlength=arr.order),
            cols,
            np.zeros(arr.order, dtype=np.int64),
        )
        if not RootMultiset(arr.order, tuple(summed.tolist())).is_zero():
            return ConditionVerdict(False, (shift,))
    return ConditionVerdict(True, None)


def aop_verdict(s: ExponentSequence, divisor: int) -> AopReport:
    """Fold s, check both AOP conditions, and record the perfection verdict.

    AOP implies perfection, so a report with overall=True and
    sequence_perfect=False would expose a bug in one of the checkers.
    """
    arr = fold(s, divisor)
    condition1 = aop_condition1(arr)
    condition2 = aop_condition2(arr)
    perfect = is_perfect_exact(s).perfect
    return AopReport(divisor, condition1, condition2, perfect)
