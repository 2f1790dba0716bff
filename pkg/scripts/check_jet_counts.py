#!/usr/bin/env python3
"""Sweep the finite-field jet-count check over a family of polynomials.

Exits nonzero if any enumerated stratum count disagrees with the predicted
base-count times p^fiber product.
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from contactloci.oracle import count_contact_jets, parse_poly  # noqa: E402

DEFAULT_POLYS = ["x0^2+x1^2+x2^2", "x0^3+x1^3+x2^3", "x0^2+x1^2+x2^2+x0^3"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--polys", nargs="*", default=DEFAULT_POLYS)
    parser.add_argument("--mmax", type=int, default=4)
    parser.add_argument("--primes", default="3,5,7")
    parser.add_argument("--budget", type=int, default=10_000_000)
    args = parser.parse_args()

    primes = [int(p) for p in args.primes.split(",")]
    all_ok = True
    for text in args.polys:
        poly = parse_poly(text)
        degree = poly.initial_form().min_total_degree()
        for m in range(1, args.mmax + 1):
            for p in primes:
                if degree % p == 0:
                    continue  # the reduction of the initial form is singular
                started = time.perf_counter()
                report = count_contact_jets(poly, m, p, budget=args.budget)
                verdict = "ok" if report.matches else "MISMATCH"
                all_ok &= report.matches
                print(f"{text}  m={m} p={p}: total={report.total_count} "
                      f"{verdict} ({time.perf_counter() - started:.2f}s)")
    print("all counts match" if all_ok else "MISMATCH FOUND")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
