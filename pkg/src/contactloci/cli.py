"""Command-line front end.

One executable, subcommand style, every numeric parameter an explicit flag.
Default output is human-readable text; --format json is the stable machine
interface and the scatter command also emits CSV or a dependency-free SVG.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .contact import (
    contact_class,
    contact_cohomology,
    contact_dimension,
    contact_euler,
    graded_pieces,
    piece_compact_cohomology,
)
from .groups import GradedGroup
from .nash import valuation_report
from .oracle import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    NonIsolatedSingularityError,
    NonSmoothReductionError,
    SparseIntPoly,
    count_contact_jets,
    parse_poly,
)
from .resolution import build_minimal_resolution, m_divisors
from .spectral import (
    comparison_shift,
    condition_degeneration,
    condition_filtration,
    floer_cohomology,
    scatter_grid,
)
from .surface import milnor_number

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SCATTER_COLORS = {
    "blue": "#4477aa",
    "orange": "#ee7733",
    "yellow": "#ddcc33",
    "pink": "#ee77aa",
}


def _write(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def _emit(args, doc: dict, text: str) -> int:
    if args.format == "json":
        _write(args, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        _write(args, text)
    return EXIT_OK


def _graded_lines(profile: GradedGroup, label: str) -> list[str]:
    lines = [label]
    if profile.is_zero:
        lines.append("  (zero)")
    for degree, group in profile.entries:
        lines.append(f"  degree {degree}: {group}")
    return lines


def cmd_resolve(args) -> int:
    chain = build_minimal_resolution(args.n, args.d, args.m)
    mlist = m_divisors(chain)
    doc = chain.to_doc()
    doc["m_divisors"] = mlist.to_doc()
    lines = [f"minimal {args.m}-separating resolution for n={args.n}, d={args.d}, m={args.m}",
             "chain (left to right):",
             "  kappa  r      N     nu  kind"]
    for div in chain:
        lines.append(f"  {div.pair.kappa:>5}  {div.pair.r:<4} {div.multiplicity:>4} "
                     f"{div.log_discrepancy:>6}  {div.kind}")
    lines.append("m-divisors (multiplicity divides m):")
    lines.append("      i  kappa  r      N     nu  exceptional")
    for entry in mlist.entries:
        div = entry.divisor
        lines.append(f"  {entry.index:>5}  {div.pair.kappa:>5}  {div.pair.r:<4} "
                     f"{div.multiplicity:>4} {div.log_discrepancy:>6}  "
                     f"{'yes' if entry.exceptional else 'no'}")
    return _emit(args, doc, "\n".join(lines) + "\n")


def cmd_cohomology(args) -> int:
    n, d, m = args.n, args.d, args.m
    pieces = graded_pieces(n, d, m)
    total = contact_cohomology(n, d, m)
    cls = contact_class(n, d, m)
    doc = {
        "n": n, "d": d, "m": m,
        "pieces": [
            {**piece.to_doc(),
             "cohomology": piece_compact_cohomology(piece, n, d).to_doc()}
            for piece in pieces
        ],
        "total": total.to_doc(),
        "euler": total.euler_char(),
        "dimension": contact_dimension(n, d, m),
        "motivic_class": cls.to_doc(),
    }
    lines = [f"compactly supported cohomology of the contact locus, n={n}, d={d}, m={m}"]
    if not pieces:
        lines.append("empty locus: m < d")
    for piece in pieces:
        profile = piece_compact_cohomology(piece, n, d)
        lines.extend(_graded_lines(
            profile,
            f"order {piece.rho} stratum ({piece.base_kind}, fiber dim {piece.fiber_dim}, "
            f"total dim {piece.total_dim}):"))
    lines.extend(_graded_lines(total, "total:"))
    lines.append(f"euler characteristic: {total.euler_char()}")
    lines.append(f"class: {cls}")
    return _emit(args, doc, "\n".join(lines) + "\n")


def cmd_floer(args) -> int:
    n, d, m = args.n, args.d, args.m
    deg = condition_degeneration(n, d, m)
    filt = condition_filtration(n, d, m)
    profile = floer_cohomology(n, d, m)
    doc = {
        "n": n, "d": d, "m": m,
        "condition_degeneration": deg.to_doc(),
        "condition_filtration": filt.to_doc(),
        "determined": profile is not None,
        "shift": comparison_shift(n, m),
        "floer": None if profile is None else profile.to_doc(),
    }
    lines = [f"fixed-point Floer cohomology of the iterate m={m}, n={n}, d={d}",
             f"degeneration condition: {'holds' if deg.holds else 'fails at k = ' + str(list(deg.violating_k))}",
             f"filtration condition:   {'holds' if filt.holds else 'fails at k = ' + str(list(filt.violating_k))}"]
    if profile is None:
        lines.append("not determined by the isomorphism theorem for these parameters")
    else:
        lines.extend(_graded_lines(profile, f"HF (shift {comparison_shift(n, m)}):"))
    return _emit(args, doc, "\n".join(lines) + "\n")


def cmd_nash(args) -> int:
    report = valuation_report(args.n, args.d, args.m)
    doc = report.to_doc()
    dlt, contact, essential = report.counts()
    lines = [f"m-valuations for n={args.n}, d={args.d}, m={args.m}",
             f"counts: dlt={dlt}, contact={contact}, essential={essential}"]

    def describe(name, divisors):
        if not divisors:
            lines.append(f"{name}: none")
        else:
            parts = ", ".join(f"{div.pair} N={div.multiplicity} nu={div.log_discrepancy}"
                              for div in divisors)
            lines.append(f"{name}: {parts}")

    describe("essential", report.essential)
    describe("contact", report.contact)
    describe("dlt", report.dlt)
    for i, codim in report.codims:
        lines.append(f"codim of the order-{-i} stratum (i={i}): {codim}")
    return _emit(args, doc, "\n".join(lines) + "\n")


def cmd_euler(args) -> int:
    n, d, m = args.n, args.d, args.m
    chi = contact_euler(n, d, m)
    closed = 0 if m % d else 1 + (-1) ** (n - 1) * milnor_number(n, d)
    match = chi == closed
    doc = {"n": n, "d": d, "m": m, "chi": chi, "lefschetz": closed, "match": match}
    text = (f"chi_c(X_m) = {chi}\n"
            f"Lefschetz number of the m-th iterate = {closed}\n"
            f"match: {'yes' if match else 'NO'}\n")
    code = _emit(args, doc, text)
    return code if match else EXIT_MISMATCH


def _scatter_csv(rows) -> str:
    out = ["n,d,class"]
    out.extend(f"{n},{d},{cls.color}" for n, d, cls in rows)
    return "\n".join(out) + "\n"


def _scatter_svg(rows, n_max: int, d_max: int) -> str:
    cell = 12
    left, bottom, top, right = 40, 30, 14, 150
    width = left + (n_max - 3 + 1) * cell + right
    height = top + (d_max - 2 + 1) * cell + bottom
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for n, d, cls in rows:
        x = left + (n - 3) * cell
        y = top + (d_max - d) * cell
        parts.append(f'<rect x="{x}" y="{y}" width="{cell - 1}" height="{cell - 1}" '
                     f'fill="{SCATTER_COLORS[cls.color]}"><title>n={n}, d={d}: '
                     f'{cls.color}</title></rect>')
    axis_y = top + (d_max - 2 + 1) * cell + 12
    for n in range(3, n_max + 1, 5):
        x = left + (n - 3) * cell
        parts.append(f'<text x="{x}" y="{axis_y}" font-size="9">{n}</text>')
    for d in range(2, d_max + 1, 5):
        y = top + (d_max - d) * cell + 9
        parts.append(f'<text x="{left - 24}" y="{y}" font-size="9">{d}</text>')
    parts.append(f'<text x="{left}" y="{axis_y + 14}" font-size="10">n (variables)</text>')
    parts.append(f'<text x="4" y="{top - 2}" font-size="10">d (degree)</text>')
    legend_x = left + (n_max - 3 + 1) * cell + 12
    legend = [("blue", "isomorphism proved"),
              ("orange", "filtration condition can fail"),
              ("yellow", "degeneration condition can fail"),
              ("pink", "both conditions can fail")]
    for row, (color, label) in enumerate(legend):
        y = top + row * 16
        parts.append(f'<rect x="{legend_x}" y="{y}" width="10" height="10" '
                     f'fill="{SCATTER_COLORS[color]}"/>')
        parts.append(f'<text x="{legend_x + 14}" y="{y + 9}" font-size="9">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_scatter(args) -> int:
    if not 3 <= args.nmax <= 200:
        raise ValueError("nmax must lie in [3, 200]")
    if not 2 <= args.dmax <= 200:
        raise ValueError("dmax must lie in [2, 200]")
    rows = scatter_grid(range(3, args.nmax + 1), range(2, args.dmax + 1))
    if args.format == "svg":
        _write(args, _scatter_svg(rows, args.nmax, args.dmax))
        return EXIT_OK
    if args.format == "csv":
        _write(args, _scatter_csv(rows))
        return EXIT_OK
    doc = {"rows": [{"n": n, "d": d, "class": cls.color} for n, d, cls in rows]}
    text_lines = [f"{n:>4} {d:>4}  {cls.color}" for n, d, cls in rows]
    return _emit(args, doc, "   n    d  class\n" + "\n".join(text_lines) + "\n")


def _load_poly(spec: str) -> SparseIntPoly:
    spec = spec.strip()
    if spec.startswith("{"):
        return SparseIntPoly.from_doc(json.loads(spec))
    return parse_poly(spec)


def cmd_verify(args) -> int:
    poly = _load_poly(args.f)
    primes = [int(chunk) for chunk in args.primes.split(",") if chunk.strip()]
    if not primes:
        raise ValueError("no primes given")
    reports = [count_contact_jets(poly, args.m, p, budget=args.budget) for p in primes]
    all_match = all(report.matches for report in reports)
    doc = {
        "f": poly.to_doc(),
        "m": args.m,
        "reports": [report.to_doc() for report in reports],
        "all_match": all_match,
    }
    lines = [f"jet counts for f = {poly}, m = {args.m}"]
    for report in reports:
        lines.append(f"p = {report.prime}: total {report.total_count} "
                     f"(cone base {report.cone_count}, fiber base {report.milnor_count})")
        predicted = dict(report.predicted_by_order)
        for rho, count in report.by_order:
            want = predicted.get(rho)
            verdict = "ok" if want == count else f"MISMATCH (predicted {want})"
            lines.append(f"  order {rho}: counted {count}, predicted {want}: {verdict}")
        if not report.by_order:
            lines.append("  empty locus (m below the degree)")
    lines.append("verdict: " + ("all counts match" if all_match else "MISMATCH"))
    code = _emit(args, doc, "\n".join(lines) + "\n")
    return code if all_match else EXIT_MISMATCH


def _add_ndm(sub, n_min: int) -> None:
    sub.add_argument("--n", type=int, required=True,
                     help=f"number of variables (>= {n_min})")
    sub.add_argument("--d", type=int, required=True, help="degree of the initial form")
    sub.add_argument("--m", type=int, required=True, help="contact order (>= 1)")


def _add_output(sub, choices=("text", "json")) -> None:
    sub.add_argument("--format", choices=choices, default="text")
    sub.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contactloci",
        description="Exact invariants of contact loci of semihomogeneous singularities.")
    subs = parser.add_subparsers(dest="command", required=True)

    resolve = subs.add_parser("resolve", help="minimal m-separating resolution chain")
    _add_ndm(resolve, 2)
    _add_output(resolve)
    resolve.set_defaults(handler=cmd_resolve)

    cohomology = subs.add_parser("cohomology", help="H_c of the restricted contact locus")
    _add_ndm(cohomology, 3)
    _add_output(cohomology)
    cohomology.set_defaults(handler=cmd_cohomology)

    floer = subs.add_parser("floer", help="Floer cohomology of the m-th monodromy iterate")
    _add_ndm(floer, 3)
    _add_output(floer)
    floer.set_defaults(handler=cmd_floer)

    nash = subs.add_parser("nash", help="dlt, contact and essential m-valuations")
    _add_ndm(nash, 2)
    _add_output(nash)
    nash.set_defaults(handler=cmd_nash)

    euler = subs.add_parser("euler", help="Euler characteristic versus Lefschetz number")
    _add_ndm(euler, 3)
    _add_output(euler)
    euler.set_defaults(handler=cmd_euler)

    scatter = subs.add_parser("scatter", help="classify (n, d) pairs on a grid")
    scatter.add_argument("--nmax", type=int, required=True)
    scatter.add_argument("--dmax", type=int, required=True)
    _add_output(scatter, choices=("text", "json", "csv", "svg"))
    scatter.set_defaults(handler=cmd_scatter)

    verify = subs.add_parser("verify", help="finite-field jet counts against predictions")
    verify.add_argument("--f", required=True,
                        help="polynomial, inline grammar (e.g. 'x0^2+x1^2+x2^2') or JSON document")
    verify.add_argument("--m", type=int, required=True)
    verify.add_argument("--primes", required=True, help="comma-separated primes, e.g. 3,5,7")
    verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="cap on enumerated candidate vectors")
    _add_output(verify)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, NonSmoothReductionError, NonIsolatedSingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
