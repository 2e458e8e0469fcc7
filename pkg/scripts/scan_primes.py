"""Run the congruence scan for every odd prime up to a bound and several exponent sets.

    python scripts/scan_primes.py [--bound 101]
"""

import argparse

from leecodes.certify import scan_modulus
from leecodes.groups import is_prime


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=101)
    args = parser.parse_args()

    for k_set in [(1, 2), (1, 2, 3)]:
        print(f"k in {set(k_set)}:")
        for p in range(3, args.bound + 1):
            if not is_prime(p) or len(k_set) > 2 and p > 47:
                continue
            report = scan_modulus(p, k_set, bound=args.bound)
            refuted = sorted(report.residues_refuted)
            print(f"  p = {p:>3}: {refuted if refuted else '-'}")


if __name__ == "__main__":
    main()
