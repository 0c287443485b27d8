"""Compare the tree closed form with exhaustive search on every labeled tree up to --max-n."""

import argparse

from greedyorder.graphs import enumerate_labeled_trees
from greedyorder.ordering import MAX_EXACT_N, best_ordering_exact, tree_tmin_closed_form


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8, choices=range(2, MAX_EXACT_N + 1))
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        total = bad = 0
        for g in enumerate_labeled_trees(n):
            total += 1
            bad += tree_tmin_closed_form(g) != best_ordering_exact(g).total
        print(f"n={n}: {total} trees, {bad} mismatches")


if __name__ == "__main__":
    main()
