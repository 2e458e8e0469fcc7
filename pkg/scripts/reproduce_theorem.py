"""Rebuild the mod-25 nonexistence result from scratch and tabulate the density counts.

    python scripts/reproduce_theorem.py [--limit 1000000] [--certs-dir DIR]
"""

import argparse
from pathlib import Path

from leecodes.certify import (
    NonexistenceCertificate,
    certify_range,
    compare_bounds,
    density_count,
    scan_modulus,
    verify_certificate,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=10**6)
    parser.add_argument("--certs-dir", type=Path, default=None, help="write the n < 100 certificates here")
    args = parser.parse_args()

    report = scan_modulus(5, (1, 2))
    print(f"residues mod 25 refuted by the k=1,2 congruences: {sorted(report.residues_refuted)}")

    certs, tally = certify_range(3, args.limit + 1)
    bad = sum(not verify_certificate(c) for c in certs)
    print(f"n in [3, {args.limit}]: {len(certs)} certificates ({bad} failed verification)")
    for reason, count in sorted(tally.items()):
        print(f"  not applicable, {reason.value}: {count}")

    if args.certs_dir:
        args.certs_dir.mkdir(parents=True, exist_ok=True)
        for c in certs:
            if c.n < 100:
                (args.certs_dir / f"cert_n{c.n}.json").write_text(c.to_json(), encoding="utf-8")
        print(f"wrote {sum(c.n < 100 for c in certs)} certificates to {args.certs_dir}")

    print()
    print(f"{'X':>10} {'count':>8} {'ratio':>8} {'4X/25':>10} {'X/(1.5 ln X)':>14}")
    x = 25
    while x <= args.limit:
        d = density_count(x)
        _, new, old = compare_bounds(x)
        print(f"{x:>10} {d.count:>8} {float(d.ratio):>8.5f} {float(new):>10.1f} {old:>14.1f}")
        x *= 10 if x % 10 == 0 else 4


if __name__ == "__main__":
    main()
