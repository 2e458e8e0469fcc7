"""Exhaustive search for linear PL(n, e) codes over a grid of small (n, e).

    python scripts/small_dimension_search.py [--max-n 5] [--max-e 4] [--budget N]
"""

import argparse

from leecodes.groups import format_group, format_images
from leecodes.lee import BallSpec, ball_size
from leecodes.search import BudgetExceeded, search_linear_pl


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-e", type=int, default=4)
    parser.add_argument("--budget", type=int, default=2 * 10**6)
    args = parser.parse_args()

    print(f"{'n':>2} {'e':>2} {'|B|':>6} {'groups':<16} {'cands':>9} {'orbits':>7} {'time':>7}  witness")
    for n in range(1, args.max_n + 1):
        for e in range(1, args.max_e + 1):
            size = ball_size(BallSpec(n, e))
            try:
                r = search_linear_pl(n, e, budget=args.budget, first_only=False)
            except BudgetExceeded as exc:
                print(f"{n:>2} {e:>2} {size:>6} over budget ({exc.needed} candidates)")
                continue
            groups = " ".join(format_group(G) for G in r.groups_examined)
            first = r.witnesses[0] if r.witnesses else None
            wit = f"Z[{format_group(first.group)}] {format_images(first.images)}" if first else "none"
            print(
                f"{n:>2} {e:>2} {size:>6} {groups:<16} {r.candidates_examined:>9} "
                f"{r.canonical_candidates:>7} {r.wall_time:>6.2f}s  {wit}"
                + (f" (+{len(r.witnesses) - 1} more)" if len(r.witnesses) > 1 else "")
            )


if __name__ == "__main__":
    main()
