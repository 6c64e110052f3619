"""Command-line frontend.

Subcommands: count, classify, psi, poly, entropy, bounds, table.
Exit codes: 0 success, 1 usage error, 2 overflow or cache/reference
integrity failure.  The environment variable SQFREE_CACHE supplies a
default --cache path.  All numeric cells print with 8 decimals; counts
appear as decimal strings in JSON output so 64-bit consumers never
truncate them.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import entropy as ent
from . import tables
from .cache import CacheIntegrityError, cached_count_up_to, checkpoint_load
from .counting import CounterOverflowError, totals_up_to
from .polynomials import (
    InconsistentCountsError,
    omega_alphabet_row,
    psi_table_from_engine,
    recover_P,
    remainder_R,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTEGRITY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _common_flags(p: argparse.ArgumentParser, alphabet=True) -> None:
    if alphabet:
        p.add_argument("--alphabet", type=int, required=True, help="number of letters")
        p.add_argument("--max-len", type=int, required=True, help="longest word length")
    p.add_argument("--workers", type=int, default=None, help="thread count (default: all cores)")
    p.add_argument("--split-depth", type=int, default=6, help="DFS split depth for parallel subtrees")
    p.add_argument(
        "--cache",
        default=os.environ.get("SQFREE_CACHE"),
        help="count-cache path (default: $SQFREE_CACHE)",
    )
    p.add_argument("--format", choices=("csv", "json", "tsv"), default="csv")
    p.add_argument("--out", default=None, help="write output here instead of stdout")


def _emit(args, columns: list[str], rows: list[tuple[str, ...]]) -> None:
    if args.format == "json":
        payload = {"columns": columns, "rows": [dict(zip(columns, r)) for r in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        sep = "," if args.format == "csv" else "\t"
        lines = [sep.join(columns)] + [sep.join(r) for r in rows]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _fmt(v: float) -> str:
    return f"{v:.8f}"


def _records(args, x, n_max, symmetry="prefix"):
    return cached_count_up_to(
        x,
        n_max,
        args.cache,
        symmetry=symmetry,
        workers=args.workers,
        split_depth=args.split_depth,
    )


def _totals(args, x, n_max):
    # serve totals from a fully covering cache, else count afresh
    # (totals-only kernels; not worth a cache write without classes)
    if args.cache and os.path.exists(args.cache):
        cache = checkpoint_load(args.cache)
        if cache.has_range(x, n_max):
            return [r.total for r in cache.row(x, n_max)]
    return totals_up_to(
        x, n_max, workers=args.workers, split_depth=args.split_depth
    )


def cmd_count(args) -> int:
    records = _records(args, args.alphabet, args.max_len)
    totals = [r.total for r in records]
    rows = []
    for n in range(len(totals)):
        ratio = ""
        if n >= 1:
            ratio = _fmt(
                math.log(totals[n] / totals[n - 1]) if totals[n] and totals[n - 1] else 0.0
            )
        upper = ""
        if n >= 3 and totals[n] > 0 and totals[2] > 0:
            upper = _fmt((math.log(totals[n]) - math.log(totals[2])) / (n - 2))
        rows.append((str(n), str(totals[n]), ratio, upper))
    _emit(args, ["n", "omega", "log_ratio", "upper_j2"], rows)
    return EXIT_OK


def cmd_classify(args) -> int:
    records = _records(args, args.alphabet, args.max_len)
    x = args.alphabet
    cols = (
        ["n"]
        + [f"ext{e}" for e in range(x + 1)]
        + [f"ratio{e}" for e in range(x + 1)]
    )
    rows = []
    for rec in records:
        cells = [str(rec.n)] + [str(rec.ext[e]) for e in range(x + 1)]
        if rec.total:
            cells += [_fmt(rec.ext[e] / rec.total) for e in range(x + 1)]
        else:
            cells += [""] * (x + 1)
        rows.append(tuple(cells))
    _emit(args, cols, rows)
    return EXIT_OK


def cmd_psi(args) -> int:
    if args.x is not None and args.x > args.n and args.x > 0:
        # psi_n(x) = 0 for x > n; avoid pointless enumeration
        _emit(args, ["n", "x", "psi"], [(str(args.n), str(args.x), "0")])
        return EXIT_OK
    k_max = args.x if args.x is not None else args.n
    table = psi_table_from_engine(
        args.n, k_max, workers=args.workers, split_depth=args.split_depth
    )
    rows = []
    if args.x is not None:
        rows.append((str(args.n), str(args.x), str(table.psi(args.n, args.x))))
    else:
        for n in range(args.n + 1):
            for k in range(min(n, k_max) + 1):
                rows.append((str(n), str(k), str(table.psi(n, k))))
    _emit(args, ["n", "x", "psi"], rows)
    return EXIT_OK


def cmd_poly(args) -> int:
    if args.n > args.max_n:
        raise ValueError(
            f"--n {args.n} exceeds --max-n {args.max_n}; raise the cap if you "
            f"really want the enumeration cost"
        )
    need = args.n + (1 if args.show_remainder else 0)
    rows_by_n = {m: omega_alphabet_row(m, workers=args.workers) for m in range(need + 1)}
    polys = {m: recover_P(m, rows_by_n[m]) for m in range(need + 1)}
    payload = {
        "n": args.n,
        "coefficients": polys[args.n].coeff_strings(),
        "factored": polys[args.n].factored_str(),
    }
    if args.show_remainder:
        if args.n <= 2:
            raise ValueError("--show-remainder needs n > 2")
        rem = remainder_R(polys[args.n - 1], polys[args.n], polys[args.n + 1])
        payload["remainder"] = {
            "coefficients": rem.coeff_strings(),
            "factored": rem.factored_str(),
            "degree": rem.degree if rem else None,
        }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_entropy(args) -> int:
    totals = _totals(args, args.alphabet, args.max_len)
    est = ent.estimate_entropy(totals)
    window = (
        tuple(args.fit_window)
        if args.fit_window
        else ent.default_fit_window(args.max_len)
    )
    asym = ent.fit_asymptotic(totals)
    ls = ent.fit_linear(totals, window)
    rows = [
        (
            str(args.alphabet),
            str(args.max_len),
            _fmt(est),
            _fmt(asym.epsilon),
            _fmt(asym.intercept_a),
            _fmt(ls.epsilon),
            _fmt(ls.intercept_a),
            str(ls.window[0]),
            str(ls.window[1]),
            _fmt(ls.residual),
        )
    ]
    cols = [
        "x", "n_max", "estimate",
        "fit_epsilon", "fit_intercept",
        "ls_epsilon", "ls_intercept", "ls_lo", "ls_hi", "ls_residual",
    ]
    _emit(args, cols, rows)
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = tables.bounds_row(
        args.alphabet,
        args.max_len,
        workers=args.workers,
        split_depth=args.split_depth,
        totals=_totals(args, args.alphabet, args.max_len)
        if args.alphabet != 3
        else None,
    )
    _emit(
        args,
        ["x", "n_max", "lower", "estimate", "upper", "log_xm1", "s_tilde"],
        [tables.table3_row_cells(report)],
    )
    return EXIT_OK


def cmd_table(args) -> int:
    if args.id == 1:
        n_max = args.max_len or 90
        totals = tables.three_letter_totals(
            n_max,
            long_run=args.long_run,
            workers=args.workers,
            split_depth=args.split_depth,
        )
        _emit(args, ["n", "omega", "log_ratio", "upper_j2"], tables.table1_rows(totals))
    elif args.id == 2:
        n_max = args.max_len or 89
        records = tables.three_letter_records(
            n_max,
            long_run=args.long_run,
            workers=args.workers,
            split_depth=args.split_depth,
        )
        cols = ["n", "ext0", "ext1", "ext2", "ratio0", "ratio1", "ratio2"]
        _emit(args, cols, tables.table2_rows(records))
    else:
        xs = [args.row] if args.row else sorted(tables.table3_nmax())
        rows = []
        for x in xs:
            report = tables.bounds_row(
                x,
                long_run=args.long_run,
                workers=args.workers,
                split_depth=args.split_depth,
            )
            rows.append(tables.table3_row_cells(report))
        _emit(
            args,
            ["x", "n_max", "lower", "estimate", "upper", "log_xm1", "s_tilde"],
            rows,
        )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="sqfree",
        description="Count square-free words, recover their counting polynomials, "
        "and reproduce the published census and entropy tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact counts with entropy columns")
    _common_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", help="counts split by extension class")
    _common_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("psi", help="counts of words using exactly x letters")
    _common_flags(p, alphabet=False)
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--x", type=int, default=None, help="exact letter count (default: full table)")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("poly", help="counting polynomial for one length")
    _common_flags(p, alphabet=False)
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--show-remainder", action="store_true", help="include the recurrence remainder")
    p.add_argument("--max-n", type=int, default=9, help="cost cap on n (full-table recovery is exponential)")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("entropy", help="entropy estimate and linear fit")
    _common_flags(p)
    p.add_argument("--fit-window", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("bounds", help="bounds-and-estimate row for one alphabet")
    _common_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="reproduce a published table")
    _common_flags(p, alphabet=False)
    p.add_argument("--id", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--row", type=int, default=None, help="single alphabet size (table 3)")
    p.add_argument("--max-len", type=int, default=None, help="truncate rows (tables 1 and 2)")
    p.add_argument(
        "--long-run",
        action="store_true",
        help="recount the three-letter column all the way instead of using the vendored reference",
    )
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (CounterOverflowError, CacheIntegrityError, tables.ReferenceMismatchError, InconsistentCountsError) as exc:
        sys.stderr.write(f"sqfree: {exc}\n")
        return EXIT_INTEGRITY
    except ValueError as exc:
        sys.stderr.write(f"sqfree: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
