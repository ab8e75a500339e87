"""Cyclic and ad-invariant solution-space dimensions across the catalog.

    python scripts/dimension_table.py [--names sl2 so4 ...] [--csv out.csv]
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from cyclic_metric.catalog import make
from cyclic_metric.forms import cyclic_space, invariant_space
from cyclic_metric.lie import center, derived_series

DEFAULT_NAMES = ["sl2", "so3", "sl3", "so4", "gl2", "gl3", "heisenberg3", "heisenberg5", "abelian3", "r2",
                 "remark_lorentz", "sl2_semidirect_F2", "gl2_semidirect_F2", "so3_semidirect_F3",
                 "sl3_semidirect_F3"]


@dataclass
class TableConfig:
    names: list = field(default_factory=lambda: list(DEFAULT_NAMES))
    csv_path: str | None = None


def rows(cfg: TableConfig):
    for name in cfg.names:
        g = make(name).algebra
        ds = derived_series(g)
        yield {
            "algebra": name,
            "dim": g.dim,
            "cyclic": cyclic_space(g).dimension,
            "invariant": invariant_space(g).dimension,
            "center": center(g).dim,
            "perfect": ds[0] == ds[-1],
        }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--names", nargs="*", default=DEFAULT_NAMES)
    p.add_argument("--csv", dest="csv_path")
    args = p.parse_args(argv)
    cfg = TableConfig(args.names, args.csv_path)
    table = list(rows(cfg))
    print(f"{'algebra':<20}{'dim':>4}{'cyclic':>8}{'invariant':>11}{'center':>8}{'perfect':>9}")
    for r in table:
        print(f"{r['algebra']:<20}{r['dim']:>4}{r['cyclic']:>8}{r['invariant']:>11}{r['center']:>8}{str(r['perfect']):>9}")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(table[0]))
            w.writeheader()
            w.writerows(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
