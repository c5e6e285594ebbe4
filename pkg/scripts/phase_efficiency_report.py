#!/usr/bin/env python3
"""Cross-family phase-efficiency report.

Tabulates length / number-of-phases for the perfect-sequence families at
comparable sizes.  The ranking between families depends on the parameters
chosen, so this is a computed report, not an asserted ordering.  Every row
is re-verified perfect before being printed.
"""

import argparse

from perfseq.correlation import is_perfect_exact
from perfseq.sequences import (
    blake_tirkel_sequence,
    chu,
    frank,
    milewski,
    phase_efficiency,
    validate_params,
)


def rows(max_length):
    for n in (1, 2, 3, 4):
        for m in (1, 2):
            for k in (1, 2):
                p = validate_params(n, m, k)
                if p.length <= max_length:
                    yield f"blake-tirkel(n={n},m={m},k={k})", blake_tirkel_sequence(p)
    for n in (2, 3, 4, 6, 8, 12, 16):
        if n * n <= max_length:
            yield f"frank(n={n})", frank(n)
    for n in (4, 9, 16, 25, 36):
        if n <= max_length:
            yield f"chu(n={n})", chu(n)
    for m, k in ((2, 1), (3, 1), (2, 2)):
        if m ** (2 * k + 1) <= max_length:
            yield f"milewski(m={m},k={k})", milewski(m, k)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=1024)
    args = parser.parse_args()

    table = []
    for label, seq in rows(args.max_length):
        assert is_perfect_exact(seq).perfect, f"{label} failed verification"
        table.append((phase_efficiency(seq), label, seq.length, seq.order))

    table.sort(reverse=True)
    print(f"{'family':<28} {'length':>7} {'phases':>7} {'length/phases':>14}")
    for efficiency, label, length, order in table:
        print(f"{label:<28} {length:>7} {order:>7} {str(efficiency):>14}")


if __name__ == "__main__":
    main()
