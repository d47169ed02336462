"""Exhaustive maximum k-multiplicative subsets of [n] next to the S_k and T_k counts.

The ratio max / |S_k cap [n]| is printed for inspection only; no asymptotic
claim is tested here.
"""
import argparse

from sidoncolor import BudgetExceeded, sidon


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--n", type=int, nargs="+", default=[10, 20, 40, 80, 120])
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()
    print(f"{'k':>3} {'n':>5} {'max':>5} {'|S|':>5} {'|T|':>5} {'max/|S|':>8} {'max/|T|':>8}")
    for k in args.k:
        for n in args.n:
            try:
                best, flag = sidon.max_sidon_subset(n, k, budget=args.budget), ""
            except BudgetExceeded as exc:
                best, flag = exc.best, " (budget hit, lower bound)"
            s, t = len(sidon.generate_S(k, n)), len(sidon.generate_T(k, n))
            print(f"{k:>3} {n:>5} {len(best):>5} {s:>5} {t:>5} {len(best) / s:>8.3f} {len(best) / t:>8.3f}{flag}")


if __name__ == "__main__":
    main()
