"""Perfect periodic autocorrelation sequences over roots of unity.

Exact construction and verification: sequences are integer exponent vectors,
correlation values are sums of roots of unity with integer counts, and
perfection is certified symbolically via cyclotomic polynomial divisibility.
A numpy FFT path provides fast numeric cross-checks.
"""

from .aop import (
    AopReport,
    ConditionVerdict,
    aop_condition1,
    aop_condition2,
    aop_verdict,
    column_cross_correlation,
    fold,
)
from .correlation import (
    ArrayVerdict,
    CorrelationProfile,
    SequenceVerdict,
    array_autocorrelation_2d,
    autocorrelation_fft,
    autocorrelation_profile_exact,
    cross_correlation_exact,
    is_perfect_array,
    is_perfect_exact,
    max_offpeak_magnitude,
)
from .roots import (
    IntPolynomial,
    RootMultiset,
    cyclotomic,
    evaluate,
    is_zero_sum,
    multiset_add,
    root_value,
)
from .sequences import (
    ConstructionParams,
    ExponentArray,
    ExponentSequence,
    blake_tirkel_array,
    blake_tirkel_sequence,
    chu,
    frank,
    milewski,
    phase_efficiency,
    validate_params,
)

__version__ = "0.1.0"

__all__ = [
    "AopReport",
    "ArrayVerdict",
    "ConditionVerdict",
    "ConstructionParams",
    "CorrelationProfile",
    "ExponentArray",
    "ExponentSequence",
    "IntPolynomial",
    "RootMultiset",
    "SequenceVerdict",
    "aop_condition1",
    "aop_condition2",
    "aop_verdict",
    "array_autocorrelation_2d",
    "autocorrelation_fft",
    "autocorrelation_profile_exact",
    "blake_tirkel_array",
    "blake_tirkel_sequence",
    "chu",
    "column_cross_correlation",
    "cross_correlation_exact",
    "cyclotomic",
    "evaluate",
    "fold",
    "frank",
    "is_perfect_array",
    "is_perfect_exact",
    "is_zero_sum",
    "max_offpeak_magnitude",
    "milewski",
    "multiset_add",
    "phase_efficiency",
    "root_value",
    "validate_params",
]
