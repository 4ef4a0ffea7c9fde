"""Tabulate the dimension bounds for every corank and both fields as markdown.

    python scripts/bounds_table.py --max-n 40 > bounds.md
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from rhspaces.cli import format_table, table_rows
from rhspaces.spaces import MAX_CORANK


@dataclass(frozen=True)
class TableConfig:
    max_n: int = 32
    fmt: str = "md"


def run(cfg: TableConfig) -> None:
    for field, label in (("real", "real symmetric"), ("complex", "hermitian")):
        for s in range(MAX_CORANK[field] + 1):
            rows = table_rows(cfg.max_n, s, field)
            counts = Counter(r["status"] for r in rows)
            print(f"## {label}, corank {s}\n")
            print(format_table(rows, cfg.fmt))
            print(f"\n{counts['exact']} exact, {counts['unknown']} open\n")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=TableConfig.max_n)
    p.add_argument("--format", choices=("md", "tsv"), default=TableConfig.fmt)
    a = p.parse_args(argv)
    run(TableConfig(a.max_n, a.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
