#!/usr/bin/env python3
"""Emit the (n, d) classification grid as CSV and SVG files."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from contactloci.cli import _scatter_csv, _scatter_svg  # noqa: E402
from contactloci.spectral import scatter_grid  # noqa: E402


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, default=40)
    parser.add_argument("--dmax", type=int, default=40)
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()

    rows = scatter_grid(range(3, args.nmax + 1), range(2, args.dmax + 1))
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "scatter.csv").write_text(_scatter_csv(rows))
    (out_dir / "scatter.svg").write_text(_scatter_svg(rows, args.nmax, args.dmax))

    tally = {}
    for _, _, cls in rows:
        tally[cls.color] = tally.get(cls.color, 0) + 1
    print(f"wrote {out_dir / 'scatter.csv'} and {out_dir / 'scatter.svg'}")
    for color in ("blue", "orange", "yellow", "pink"):
        print(f"  {color}: {tally.get(color, 0)} pairs")


if __name__ == "__main__":
    main()
