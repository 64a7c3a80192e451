#!/usr/bin/env python3
"""Write the four sweep CSVs and a gnuplot recipe next to each.

    python3 scripts/make_figure_data.py --out figures --points 200
"""

import argparse
import logging
from pathlib import Path

from carlsonacg.sweeps import LINES, SweepSpec, gnuplot_recipe, write_sweep

log = logging.getLogger("make_figure_data")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    parser.add_argument("--points", type=int, default=200)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    args.out.mkdir(parents=True, exist_ok=True)
    for line in LINES:
        csv_path = args.out / f"{line}.csv"
        n = write_sweep(SweepSpec.default(line, args.points), csv_path)
        (args.out / f"{line}.gp").write_text(gnuplot_recipe(line, csv_path.name), encoding="utf-8")
        log.info("%s: %d rows -> %s", line, n, csv_path)


if __name__ == "__main__":
    main()
