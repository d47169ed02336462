"""Regenerate the S_k, T_k and grid-bound tables and report any difference from the stored copies."""
import argparse
import sys

from sidoncolor import tables


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--csv", action="store_true", help="print tables as CSV instead of aligned text")
    args = ap.parse_args()
    failed = False
    for table_id in ("s", "t", "grid"):
        report = tables.REPRODUCERS[table_id]()
        print(f"== table {table_id} ==")
        if args.csv:
            print(report.to_csv(), end="")
        elif table_id == "grid":
            print("d     " + " ".join(f"{r.key[0]:>3}" for r in report.rows))
            print("bound " + " ".join(f"{r.values[0]:>3}" for r in report.rows))
        else:
            for r in report.rows:
                print(f"{r.label:>8}  {' '.join(map(str, r.values)):<60}  {r.density}")
        problems = tables.diff(report)
        failed |= bool(problems)
        for line in problems:
            print("MISMATCH", line)
        print("matches stored copy" if not problems else f"{len(problems)} mismatches")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
