import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfseq.correlation import (
    array_autocorrelation_2d,
    autocorrelation_fft,
    autocorrelation_profile_exact,
    cross_correlation_exact,
    is_perfect_array,
    is_perfect_exact,
    max_offpeak_magnitude,
)
from perfseq.roots import root_value
from perfseq.sequences import (
    ExponentArray,
    ExponentSequence,
    blake_tirkel_array,
    blake_tirkel_sequence,
    chu,
    frank,
    milewski,
    validate_params,
)


def brute_force_autocorrelation(seq, tau):
    """O(L) direct complex sum; the independent oracle for one shift."""
    z = [root_value(e, seq.order) for e in seq.exps]
    length = len(z)
    return sum(z[i] * z[(i + tau) % length].conjugate() for i in range(length))


@st.composite
def small_sequences(draw):
    order = draw(st.integers(min_value=1, max_value=12))
    exps = draw(
        st.lists(st.integers(min_value=0, max_value=order - 1), min_size=1, max_size=24)
    )
    return ExponentSequence(order, tuple(exps))


class TestCrossCorrelation:
    def test_zero_shift_is_all_peak(self):
        s = frank(3)
        ms = cross_correlation_exact(s, s, 0)
        assert ms.counts[0] == s.length
        assert sum(ms.counts) == s.length

    def test_frank2_shift1(self):
        s = frank(2)
        ms = cross_correlation_exact(s, s, 1)
        assert ms.counts == (2, 2)
        assert ms.is_zero()

    def test_shift_wraps_mod_length(self):
        s = chu(5)
        assert cross_correlation_exact(s, s, s.length) == cross_correlation_exact(s, s, 0)

    def test_negative_shift_canonicalized(self):
        s = chu(5)
        assert cross_correlation_exact(s, s, -1) == cross_correlation_exact(s, s, 4)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            cross_correlation_exact(frank(2), chu(3), 0)

    def test_rejects_order_mismatch(self):
        a = ExponentSequence(2, (0, 1))
        b = ExponentSequence(3, (0, 1))
        with pytest.raises(ValueError):
            cross_correlation_exact(a, b, 0)

    @given(small_sequences(), st.integers(min_value=0, max_value=47))
    @settings(max_examples=150)
    def test_matches_brute_force(self, seq, tau):
        ms = cross_correlation_exact(seq, seq, tau)
        assert ms.evaluate() == pytest.approx(
            brute_force_autocorrelation(seq, tau % seq.length), abs=1e-9
        )


class TestProfile:
    def test_single_element(self):
        profile = autocorrelation_profile_exact(ExponentSequence(1, (0,)))
        assert profile.length == 1
        assert profile.peak == pytest.approx(1 + 0j)

    def test_peak_structure(self):
        s = blake_tirkel_sequence(validate_params(2, 1, 1))
        profile = autocorrelation_profile_exact(s)
        assert len(profile.multisets) == s.length
        peak_ms = profile.multisets[0]
        assert peak_ms.counts[0] == s.length
        assert profile.peak == pytest.approx(complex(s.length))

    def test_all_offpeak_vanish_for_construction(self):
        s = blake_tirkel_sequence(validate_params(2, 1, 1))
        profile = autocorrelation_profile_exact(s)
        assert all(ms.is_zero() for ms in profile.multisets[1:])

    def test_constant_sequence_never_vanishes(self):
        profile = autocorrelation_profile_exact(ExponentSequence(4, (0, 0, 0, 0)))
        assert all(v == pytest.approx(4 + 0j) for v in profile.values)

    def test_conjugate_symmetry_exact(self):
        s = milewski(2, 1)
        profile = autocorrelation_profile_exact(s)
        for tau in range(1, s.length):
            assert profile.multisets[s.length - tau] == profile.multisets[tau].conjugate()

    def test_length_cap(self):
        s = ExponentSequence(2, (0, 1) * 8)
        with pytest.raises(ValueError):
            autocorrelation_profile_exact(s, max_length=8)
        autocorrelation_profile_exact(s, max_length=None)


class TestIsPerfectExact:
    def test_construction_is_perfect(self):
        assert is_perfect_exact(blake_tirkel_sequence(validate_params(2, 1, 1))).perfect

    def test_chu_is_perfect(self):
        assert is_perfect_exact(chu(3)).perfect

    def test_constant_fails_at_first_shift(self):
        verdict = is_perfect_exact(ExponentSequence(4, (0, 0, 0, 0)))
        assert not verdict.perfect
        assert verdict.witness == 1

    def test_witness_is_smallest_failing_shift(self):
        # Perfect at tau=2 by accident is irrelevant; first failure wins.
        verdict = is_perfect_exact(ExponentSequence(4, (0, 0, 1, 1)))
        assert not verdict.perfect
        assert verdict.witness == min(
            tau
            for tau in range(1, 4)
            if not cross_correlation_exact(
                ExponentSequence(4, (0, 0, 1, 1)), ExponentSequence(4, (0, 0, 1, 1)), tau
            ).is_zero()
        )

    def test_verdict_is_truthy(self):
        assert is_perfect_exact(frank(4))
        assert not is_perfect_exact(ExponentSequence(2, (0, 0)))


class TestFftPath:
    def test_constant_sequence(self):
        values = autocorrelation_fft(ExponentSequence(1, (0, 0, 0, 0)))
        assert np.allclose(values, 4.0, atol=1e-12)

    def test_frank2(self):
        values = autocorrelation_fft(frank(2))
        assert values[0] == pytest.approx(4, abs=1e-12)
        assert max_offpeak_magnitude(values) < 1e-12

    @given(small_sequences())
    @settings(max_examples=100)
    def test_peak_is_length(self, seq):
        values = autocorrelation_fft(seq)
        assert values[0] == pytest.approx(complex(seq.length), abs=1e-9 * seq.length)

    @given(small_sequences())
    @settings(max_examples=100)
    def test_matches_brute_force_every_shift(self, seq):
        values = autocorrelation_fft(seq)
        for tau in range(seq.length):
            assert values[tau] == pytest.approx(
                brute_force_autocorrelation(seq, tau), abs=1e-9 * seq.length
            )

    def test_non_power_of_two_length(self):
        # L = 4*m*n^(k+1) is generally not a power of two; 108 = 2^2 * 27.
        s = blake_tirkel_sequence(validate_params(3, 1, 2))
        assert s.length == 108
        values = autocorrelation_fft(s)
        assert max_offpeak_magnitude(values) < 1e-9 * s.length

    def test_certified_perfect_input_at_length_1024(self):
        s = blake_tirkel_sequence(validate_params(4, 1, 3))
        assert s.length == 1024
        values = autocorrelation_fft(s)
        assert max_offpeak_magnitude(values) <= 1e-9 * s.length

    @given(small_sequences())
    @settings(max_examples=100)
    def test_parseval_cross_check(self, seq):
        # With the unnormalized transform, sum |theta|^2 == sum |S_f|^4 / L.
        values = autocorrelation_fft(seq)
        spectrum = np.fft.fft(seq.values())
        lhs = float(np.sum(np.abs(values) ** 2))
        rhs = float(np.sum(np.abs(spectrum) ** 4)) / seq.length
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_flat_spectrum_for_perfect_sequence(self):
        for seq in (frank(4), chu(5), blake_tirkel_sequence(validate_params(2, 1, 1))):
            assert is_perfect_exact(seq).perfect
            power = np.abs(np.fft.fft(seq.values())) ** 2
            assert np.max(np.abs(power - seq.length)) <= 1e-6 * seq.length


class TestExactNumericAgreement:
    @pytest.mark.parametrize(
        "seq",
        [frank(4), chu(6), milewski(2, 1), blake_tirkel_sequence(validate_params(3, 1, 1))],
        ids=["frank4", "chu6", "milewski21", "bt311"],
    )
    def test_profiles_agree(self, seq):
        profile = autocorrelation_profile_exact(seq)
        values = autocorrelation_fft(seq)
        worst = max(
            abs(profile.values[tau] - values[tau]) for tau in range(seq.length)
        )
        assert worst <= 1e-9 * seq.length

    @given(small_sequences())
    @settings(max_examples=100)
    def test_conjugate_symmetry_numeric(self, seq):
        values = autocorrelation_fft(seq)
        for tau in range(1, seq.length):
            assert values[seq.length - tau] == pytest.approx(
                values[tau].conjugate(), abs=1e-9 * seq.length
            )


class TestMaxOffpeak:
    def test_clean_peak(self):
        assert max_offpeak_magnitude(np.array([4, 0, 0, 0])) == 0.0

    def test_single_offender(self):
        assert max_offpeak_magnitude(np.array([4, 1 + 0j, 0, 0])) == pytest.approx(1.0)

    def test_length_one(self):
        assert max_offpeak_magnitude(np.array([7.0])) == 0.0

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            max_offpeak_magnitude(np.array([]))


class TestArrayAutocorrelation:
    def test_peak(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        ms = array_autocorrelation_2d(arr, 0, 0)
        assert ms.counts[0] == arr.rows * arr.cols

    def test_construction_array_all_offpeak_vanish(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        for t1 in range(arr.rows):
            for t2 in range(arr.cols):
                if (t1, t2) != (0, 0):
                    assert array_autocorrelation_2d(arr, t1, t2).is_zero()

    def test_one_by_one_array(self):
        arr = ExponentArray(3, 1, 1, (0,))
        assert is_perfect_array(arr).perfect

    def test_shifts_wrap(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        assert array_autocorrelation_2d(arr, arr.rows, arr.cols) == array_autocorrelation_2d(
            arr, 0, 0
        )

    def test_negative_shifts_canonicalized(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        assert array_autocorrelation_2d(arr, -1, -1) == array_autocorrelation_2d(
            arr, arr.rows - 1, arr.cols - 1
        )

    def test_matches_scalar_oracle(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        w = [root_value(e, arr.order) for e in range(arr.order)]
        for t1, t2 in ((1, 0), (3, 1), (5, 1)):
            direct = sum(
                w[arr.at(i, j)]
                * w[arr.at((i + t1) % arr.rows, (j + t2) % arr.cols)].conjugate()
                for i in range(arr.rows)
                for j in range(arr.cols)
            )
            assert array_autocorrelation_2d(arr, t1, t2).evaluate() == pytest.approx(
                direct, abs=1e-9
            )


class TestIsPerfectArray:
    @pytest.mark.parametrize("n, m, k", [(2, 1, 1), (3, 1, 1)])
    def test_construction_arrays_perfect(self, n, m, k):
        assert is_perfect_array(blake_tirkel_array(validate_params(n, m, k))).perfect

    def test_constant_array_fails(self):
        verdict = is_perfect_array(ExponentArray(2, 2, 2, (0, 0, 0, 0)))
        assert not verdict.perfect
        assert verdict.witness == (0, 1)

    def test_cell_cap(self):
        arr = blake_tirkel_array(validate_params(2, 1, 1))
        with pytest.raises(ValueError):
            is_perfect_array(arr, max_cells=4)
