"""Regenerate the S_k, T_k and grid-bound tables and diff them against stored copies."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import sidon

ROW_LENGTH = 15

# Stored copies: (ks, first 15 elements, density).
GOLDEN_S = [
    ((2,), (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29), "1/2"),
    ((3, 4), (1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43), "1/3"),
    ((5, 6), (1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53), "4/15"),
    ((7, 8, 9, 10), (1, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61), "8/35"),
    ((11, 12), (1, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67), "16/77"),
    ((13, 14, 15, 16), (1, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71), "192/1001"),
    ((17, 18), (1, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73), "3072/17017"),
    ((19, 20, 21, 22), (1, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79), "55296/323323"),
    ((23, 24, 25, 26, 27, 28), (1, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83), "110592/676039"),
    ((29, 30), (1, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89), "442368/2800733"),
]

GOLDEN_T = [
    ((2,), (1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21), "2/3"),
    ((3,), (1, 4, 5, 7, 9, 11, 13, 16, 17, 19, 20, 23, 25, 28, 29), "1/2"),
    ((4,), (1, 5, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37), "3/7"),
    ((5, 6), (1, 7, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43), "5/14"),
    ((7,), (1, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47), "5/16"),
    ((8,), (1, 9, 11, 13, 16, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47), "7/24"),
    ((9, 10), (1, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47), "7/26"),
    ((11, 12), (1, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49), "77/312"),
    ((13, 14, 15), (1, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49, 53), "11/48"),
]

GOLDEN_GRID = [5, 13, 17, 21, 29, 37, 45, 49, 53, 61, 65, 69, 77, 81, 85]


@dataclass(frozen=True)
class TableRow:
    key: tuple[int, ...]
    values: tuple[int, ...]
    density: Fraction | None = None

    @property
    def label(self) -> str:
        if len(self.key) == 1:
            return str(self.key[0])
        if len(self.key) == 2:
            return f"{self.key[0]},{self.key[1]}"
        return f"{self.key[0]}..{self.key[-1]}"


@dataclass(frozen=True)
class TableReport:
    table_id: str
    rows: tuple[TableRow, ...]

    def to_json(self) -> dict:
        if self.table_id == "grid":
            return {"table": "grid", "rows": [{"d": r.key[0], "bound": r.values[0]} for r in self.rows]}
        return {
            "table": self.table_id,
            "rows": [
                {
                    "k": list(r.key),
                    "label": r.label,
                    "elements": list(r.values),
                    "density": f"{r.density.numerator}/{r.density.denominator}",
                    "density_approx": f"{float(r.density):.6f}",
                }
                for r in self.rows
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.table_id == "grid":
            w.writerow(["d", "bound"])
            for r in self.rows:
                w.writerow([r.key[0], r.values[0]])
        else:
            w.writerow(["k", "elements", "density"])
            for r in self.rows:
                w.writerow([r.label, " ".join(map(str, r.values)), f"{r.density.numerator}/{r.density.denominator}"])
        return buf.getvalue()


def _grouped(kind: str, k_values, key_fn) -> tuple[TableRow, ...]:
    rows = []
    for _, ks in itertools.groupby(k_values, key=key_fn):
        ks = tuple(ks)
        k = ks[0]
        elements = sidon.first_elements(kind, k, ROW_LENGTH).elements
        rows.append(TableRow(ks, elements, sidon.DENSITY[kind](k)))
    return tuple(rows)


def reproduce_s(k_max: int = 30) -> TableReport:
    """First elements and density of S_k, merging k that share their primes."""
    return TableReport("s", _grouped("s", range(2, k_max + 1), sidon.primes_upto))


def reproduce_t(k_max: int = 15) -> TableReport:
    """Same for T_k; k values merge when both primes and exponent moduli agree."""
    key = lambda k: (sidon.primes_upto(k), sidon.exponent_moduli(k))  # noqa: E731
    return TableReport("t", _grouped("t", range(2, k_max + 1), key))


def reproduce_grid(d_max: int = 15) -> TableReport:
    """``4t + 1`` with t the d-th smallest element of T_2."""
    t2 = sidon.first_elements("t", 2, d_max).elements
    return TableReport("grid", tuple(TableRow((d,), (4 * t2[d - 1] + 1,)) for d in range(1, d_max + 1)))


def golden(table_id: str) -> TableReport:
    if table_id == "grid":
        return TableReport("grid", tuple(TableRow((d,), (b,)) for d, b in enumerate(GOLDEN_GRID, start=1)))
    data = {"s": GOLDEN_S, "t": GOLDEN_T}[table_id]
    return TableReport(table_id, tuple(TableRow(ks, vals, Fraction(dens)) for ks, vals, dens in data))


def diff(report: TableReport) -> list[str]:
    """Cells that differ from the stored copy, restricted to the rows it covers."""
    stored = {row.key[0]: row for row in golden(report.table_id).rows}
    covered = set(itertools.chain.from_iterable(r.key for r in golden(report.table_id).rows))
    problems = []
    for row in report.rows:
        if row.key[0] not in covered:
            continue
        ref = stored.get(row.key[0])
        if ref is None:
            problems.append(f"row {row.label}: no stored row starts at {row.key[0]}")
            continue
        # a truncated k range may cut the last stored row short
        if row.key != ref.key and row.key != ref.key[: len(row.key)]:
            problems.append(f"row {row.label}: k grouping {row.key} != {ref.key}")
        if row.values != ref.values:
            for i, (a, b) in enumerate(zip(row.values, ref.values)):
                if a != b:
                    problems.append(f"row {row.label}: entry {i + 1} is {a}, stored {b}")
        if row.density != ref.density:
            problems.append(f"row {row.label}: density {row.density}, stored {ref.density}")
    return problems


REPRODUCERS = {"s": reproduce_s, "t": reproduce_t, "grid": reproduce_grid}
