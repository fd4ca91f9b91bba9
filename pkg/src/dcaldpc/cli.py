"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import analysis, channel
from .dca import CyclicDca, canonical_dca, p2_report, verify_p1
from .latin import are_pseudo_orthogonal, canonical_pair, pair_profile
from .pbibd import (
    BlockDesign,
    LambdaTable,
    build_design,
    format_design,
    incidence_matrix,
    is_resolvable,
    pair_counts,
    verify_lambda_table,
)
from .sparse import write_alist


def _n(value: str) -> int:
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return n


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_construct(args) -> int:
    d = build_design(args.n)
    h = incidence_matrix(d)
    out = Path(args.out)
    alist = Path(args.alist) if args.alist else out / f"h{args.n}.alist"
    dump = Path(args.dump) if args.dump else out / f"design{args.n}.txt"
    _write(alist, write_alist(h))
    _write(dump, format_design(d))
    print(f"wrote {alist} ({h.rows} checks x {h.cols} bits) and {dump}")
    return 0


def run_checks(q: CyclicDca, d: BlockDesign, table: LambdaTable = LambdaTable.DERIVED) -> list[tuple[str, bool]]:
    """Named structural checks on a DCA and the design developed from it."""
    h = incidence_matrix(d)
    n = d.n
    p2 = p2_report(q)
    counts = pair_counts(d)
    off = counts.copy()
    np.fill_diagonal(off, 0)
    return [
        ("P1", verify_p1(q)),
        ("P2", p2.ok),
        ("P2-multiset", p2.all_canonical),
        ("block-count", len(d.blocks) == 4 * n * n - 2 * n),
        ("lambda-max", bool(off.max() <= 1)),
        (f"lambda-table-{table.value}", verify_lambda_table(d, table)),
        ("resolvable", is_resolvable(d)),
        ("column-weight", set(h.column_weights()) == {3}),
        ("row-weight", set(h.row_weights()) == {2 * n - 1}),
        ("rc-constraint", analysis.check_rc_constraint(h)),
    ]


def cmd_verify(args, design: Optional[BlockDesign] = None) -> int:
    q = canonical_dca(args.n)
    d = design if design is not None else build_design(args.n)
    table = LambdaTable.NOMINAL if args.nominal_lambda else LambdaTable.DERIVED
    failed = False
    for name, ok in run_checks(q, d, table):
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failed |= not ok
    return 1 if failed else 0


def cmd_analyze(args) -> int:
    report = analysis.analyze(args.n).to_json()
    text = json.dumps(report, indent=2) + "\n"
    if args.json:
        _write(Path(args.json), text)
    for key in ("n", "length", "rank", "dimension", "rate_decimal", "girth", "min_distance", "rc_ok"):
        print(f"{key}: {report[key]}")
    print(f"witness: {' '.join(map(str, report['witness']))}")
    return 0


def rate_table_rows(n_min: int, n_max: int) -> list[tuple[int, int, int, str]]:
    rows = []
    for n in range(n_min, n_max + 1):
        rep = analysis.code_params(incidence_matrix(build_design(n)))
        rows.append((n, rep.length, rep.dimension, rep.rate_decimal))
    return rows


def cmd_rate_table(args) -> int:
    if args.to < args.from_:
        print("error: --to must be >= --from", file=sys.stderr)
        return 2
    print(f"{'n':>3} {'length':>7} {'dim':>7} {'rate':>6}")
    for n, length, dim, rate in rate_table_rows(args.from_, args.to):
        print(f"{n:>3} {length:>7} {dim:>7} {rate:>6}")
    return 0


def cmd_simulate(args) -> int:
    h = incidence_matrix(build_design(args.n))
    rate = analysis.code_params(h).rate
    try:
        sweep = [channel.parse_point(p, rate) for p in args.point]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    records = channel.run_ber(h, sweep, args.frames, args.decoder, args.seed, args.threads, args.max_iters)
    text = channel.records_to_csv(records)
    if args.csv:
        _write(Path(args.csv), text)
    if args.json:
        _write(Path(args.json), channel.records_to_json(records))
    sys.stdout.write(text)
    return 0


def cmd_latin(args) -> int:
    y, z = canonical_pair(args.n)
    verdict = are_pseudo_orthogonal(y, z)
    print("Y")
    sys.stdout.write(y.format())
    print("Z")
    sys.stdout.write(z.format())
    if args.profile:
        print("profile")
        for row in pair_profile(y, z):
            print(" ".join(map(str, row)))
    print(f"pseudo-orthogonal: {str(verdict).lower()}")
    return 0 if verdict else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dcaldpc", description="LDPC codes from cyclic difference covering arrays")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write the alist file and design dump")
    c.add_argument("--n", type=_n, required=True)
    c.add_argument("--alist", help="alist output path (default OUT/h<n>.alist)")
    c.add_argument("--dump", help="design dump path (default OUT/design<n>.txt)")
    c.add_argument("--out", default=".", help="output directory for default file names")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check DCA, design and RC properties")
    v.add_argument("--n", type=_n, required=True)
    v.add_argument("--nominal-lambda", action="store_true",
                   help="compare pair concurrences with the nominal closed-form table")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="rank, rate, girth and minimum distance")
    a.add_argument("--n", type=_n, required=True)
    a.add_argument("--json", help="write the report as JSON")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("rate-table", help="length / dimension / rate table")
    r.add_argument("--from", dest="from_", type=_n, default=6)
    r.add_argument("--to", type=_n, default=15)
    r.set_defaults(func=cmd_rate_table)

    s = sub.add_parser("simulate", help="Monte-Carlo BER/FER sweep")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--point", action="append", required=True,
                   help="channel point, e.g. bsc:0.05 or awgn:3.0 (repeatable)")
    s.add_argument("--frames", type=int, default=1000)
    s.add_argument("--decoder", choices=sorted(channel.DECODERS), default="sum-product")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-iters", type=int, default=50)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--csv", help="write records as CSV")
    s.add_argument("--json", help="write records as JSON")
    s.set_defaults(func=cmd_simulate)

    ls = sub.add_parser("latin", help="print the pseudo-orthogonal pair")
    ls.add_argument("--n", type=_n, required=True)
    ls.add_argument("--profile", action="store_true", help="also print the pair-count profile")
    ls.set_defaults(func=cmd_latin)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "frames", 1) < 1:
        print("error: --frames must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
