"""Compare constructed colour counts with exact optima and closed-form bounds on small grids and tori."""
import argparse
import time

from sidoncolor.coloring import P3, P4, EVEN_CYCLES, chromatic_number
from sidoncolor.construct import closed_form_bound, theorem_lambda_pipeline, torus_bound, torus_coloring
from sidoncolor.graphs import path, power

FAMILIES = {"p3": P3, "p4": P4, "acyclic": EVEN_CYCLES}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--exact-limit", type=int, default=30, help="run the exact solver up to this many vertices")
    args = ap.parse_args()

    print("grids P_n^k x ... (d copies), distance-2 colouring")
    print(f"{'n':>2} {'k':>2} {'d':>2} {'|V|':>5} {'R':>4} {'S':>4} {'T':>4} {'bound':>6} {'exact':>6} {'sec':>6}")
    for n, k in ((3, 1), (4, 1), (5, 2), (6, 2), (7, 3)):
        base = power(path(n), k) if k > 1 else path(n)
        for d in range(1, args.max_d + 1):
            if n**d > 4000:
                break
            t0 = time.perf_counter()
            counts = {s: theorem_lambda_pipeline([base] * d, P3, k=k, strategy=s) for s in "rst"}
            assert all(r.verified for r in counts.values())
            exact = chromatic_number(counts["r"].product.graph, P3)[0] if n**d <= args.exact_limit else "-"
            print(f"{n:>2} {k:>2} {d:>2} {n**d:>5} {counts['r'].colour_count:>4} {counts['s'].colour_count:>4} "
                  f"{counts['t'].colour_count:>4} {closed_form_bound(k, d):>6} {exact:>6} {time.perf_counter() - t0:>6.2f}")

    print("\ntori C_n^k x ... (d copies)")
    print(f"{'n':>2} {'k':>2} {'d':>2} {'|V|':>5} {'colours':>8} {'4k(2kd-2k+1)+1':>15}")
    for n, k in ((4, 1), (5, 1), (7, 1), (7, 2), (9, 2)):
        for d in range(1, args.max_d + 1):
            if n**d > 4000:
                break
            res = torus_coloring([n] * d, k=k)
            assert res.verified
            print(f"{n:>2} {k:>2} {d:>2} {n**d:>5} {res.colour_count:>8} {torus_bound(d, k):>15}")


if __name__ == "__main__":
    main()
