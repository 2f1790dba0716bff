#!/usr/bin/env python3
"""Print a survey table of the main invariants over an (n, d, m) grid."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from contactloci.contact import contact_dimension, contact_euler  # noqa: E402
from contactloci.nash import valuation_report  # noqa: E402
from contactloci.spectral import floer_cohomology  # noqa: E402


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4])
    parser.add_argument("--d", type=int, nargs="+", default=[2, 3, 4, 5])
    parser.add_argument("--mmax", type=int, default=12)
    args = parser.parse_args()

    header = f"{'n':>3} {'d':>3} {'m':>3} {'dlt':>4} {'cont':>5} {'ess':>4} " \
             f"{'chi_c':>6} {'dim':>5}  floer"
    print(header)
    print("-" * len(header))
    for n in args.n:
        for d in args.d:
            for m in range(1, args.mmax + 1):
                dlt, contact, essential = valuation_report(n, d, m).counts()
                chi = contact_euler(n, d, m)
                dim = contact_dimension(n, d, m)
                hf = floer_cohomology(n, d, m)
                floer = "-" if hf is None else ("0" if hf.is_zero else str(hf))
                print(f"{n:>3} {d:>3} {m:>3} {dlt:>4} {contact:>5} {essential:>4} "
                      f"{chi:>6} {str(dim):>5}  {floer}")


if __name__ == "__main__":
    main()
