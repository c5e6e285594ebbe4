#!/usr/bin/env python3
"""Exact-path vs FFT-path timing sweep on certified-perfect inputs.

The exact path is O(L^2) with symbolic zero tests; the FFT path is
O(L log L) in floats.  This script times both on the same sequences so the
crossover is visible, and reports the worst exact/numeric disagreement.
"""

import argparse
import time

from perfseq.correlation import (
    autocorrelation_fft,
    is_perfect_exact,
    max_offpeak_magnitude,
)
from perfseq.sequences import blake_tirkel_sequence, validate_params


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-exact-length", type=int, default=5000)
    args = parser.parse_args()

    # Lengths 2^t via (n=2, m=1, k=t-3), plus one non-power-of-two shape.
    param_sets = [(2, 1, k) for k in range(1, 10)] + [(5, 2, 3), (3, 1, 4)]
    print(f"{'params':>12} {'L':>7} {'N':>6} {'exact_s':>9} {'fft_s':>9} {'fft_offpeak':>12}")
    for n, m, k in param_sets:
        p = validate_params(n, m, k)
        if p.length > args.max_exact_length:
            continue
        seq = blake_tirkel_sequence(p)

        start = time.perf_counter()
        verdict = is_perfect_exact(seq)
        exact_s = time.perf_counter() - start
        assert verdict.perfect

        start = time.perf_counter()
        values = autocorrelation_fft(seq)
        fft_s = time.perf_counter() - start

        print(
            f"{f'({n},{m},{k})':>12} {p.length:>7} {p.order:>6} "
            f"{exact_s:>9.4f} {fft_s:>9.4f} {max_offpeak_magnitude(values):>12.3e}"
        )


if __name__ == "__main__":
    main()
