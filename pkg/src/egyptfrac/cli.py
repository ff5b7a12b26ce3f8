"""Command-line surface for the package.

Subcommands: expand, gaps, scan, recover, seq, walk.  The default output is
a human table; ``--format json`` emits JSON-lines and ``--format csv``
comma-separated rows, both schema-stable (see the README format reference).
Exit codes: 0 success, 1 domain error (message names the error), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import EgyptError, IoError
from .exactnum import format_value, parse_value, to_decimal
from .expansion import (
    DEFAULT_DIGIT_CAP,
    ExpansionKind,
    ExpansionStatus,
    expand,
    gap_sequence_naive,
)
from .gapfast import gap_sequence_fast
from .randwalk import run_walks
from .recovery import recover_sequence
from .scanner import scan_conjecture
from .sequences import fib_pow2, growth_constant, sylvester_terms

_KINDS = {
    "greedy": ExpansionKind.GREEDY,
    "odd": ExpansionKind.ODD_GREEDY,
    "pseudo": ExpansionKind.PSEUDO_GREEDY,
}

DIGIT_CAP_ENV = "EGYPT_DIGIT_CAP"


def _env_digit_cap() -> int:
    raw = os.environ.get(DIGIT_CAP_ENV)
    if raw is None:
        return DEFAULT_DIGIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{DIGIT_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{DIGIT_CAP_ENV} must be >= 1, got {cap}")
    return cap


def _print_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    print(fmt.format(*headers))
    print("  ".join("-" * w for w in widths))
    for row in rows:
        print(fmt.format(*row))


def _opt(value, render=str) -> str:
    return "" if value is None else render(value)


def _pretty(value) -> str:
    # tables show 4 rather than 4/1; machine formats keep canonical num/den
    if isinstance(value, Fraction):
        return str(value)
    return format_value(value)


# ---------------------------------------------------------------- expand --


def _expansion_row(rec) -> dict:
    return {
        "n": rec.n,
        "a": str(rec.a),
        "x": format_value(rec.x),
        "c": None if rec.c is None else str(rec.c),
        "d": None if rec.d is None else str(rec.d),
        "e": None if rec.e is None else str(rec.e),
        "eps": None if rec.eps is None else format_value(rec.eps),
    }


def _cmd_expand(args) -> int:
    digit_cap = args.digit_cap if args.digit_cap is not None else _env_digit_cap()
    result = expand(
        args.r,
        _KINDS[args.kind],
        args.terms,
        digit_cap=digit_cap,
        stop_at_first_zero=args.stop_at_zero,
    )
    rows = [_expansion_row(rec) for rec in result.records]
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        print("n,a,x,c,d,e,eps")
        for row in rows:
            print(
                ",".join(
                    _opt(row[k]) for k in ("n", "a", "x", "c", "d", "e", "eps")
                )
            )
    else:
        _print_table(
            ["n", "a", "x", "eps", "c", "e", "d"],
            [
                [
                    str(rec.n),
                    str(rec.a),
                    _pretty(rec.x),
                    "" if rec.eps is None else _pretty(rec.eps),
                    _opt(rec.c),
                    _opt(rec.e),
                    _opt(rec.d),
                ]
                for rec in result.records
            ],
        )
    if result.status is ExpansionStatus.MAX_TERMS:
        print(
            f"NONTERMINATED: no exact end within {args.terms} terms",
            file=sys.stderr,
        )
    elif result.status is ExpansionStatus.ZERO_GAP:
        print(
            f"zero gap from n = {result.zero_gap_at}; all later gaps are 0",
            file=sys.stderr,
        )
    return 0


# ------------------------------------------------------------------ gaps --


def _parse_pq(text: str) -> tuple[int, int]:
    # raw p/q, deliberately NOT normalised: the trace contract rejects
    # unreduced input rather than silently fixing it
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return int(parts[0]), 1
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise ValueError(f"expected p/q, got {text!r}")


def _trace_json(trace) -> str:
    return json.dumps(
        {
            "p": trace.p,
            "q": trace.q,
            "c": [str(c) for c in trace.c],
            "e": [str(e) for e in trace.e],
            "n0": trace.n0,
            "steps": trace.steps,
            "terminated": trace.terminated,
        }
    )


def _cmd_gaps(args) -> int:
    p, q = args.r
    if args.method in ("fast", "both"):
        fast = gap_sequence_fast(p, q, args.terms)
    if args.method in ("naive", "both"):
        naive = gap_sequence_naive(p, q, args.terms)

    if args.method == "both":
        n_cmp = min(fast.steps, len(naive))
        mismatches = [
            i + 1
            for i in range(n_cmp)
            if fast.c[i] != naive[i].c or fast.e[i] != naive[i].e
        ]
        report = {
            "p": p,
            "q": q,
            "compared_terms": n_cmp,
            "mismatch_indices": mismatches,
            "agree": not mismatches,
        }
        if args.format == "json":
            print(json.dumps(report))
        else:
            print(f"compared {n_cmp} terms: " + ("agree" if not mismatches else f"MISMATCH at {mismatches}"))
        return 1 if mismatches else 0

    if args.method == "fast":
        if args.format == "json":
            print(_trace_json(fast))
        elif args.format == "csv":
            print("n,c,e,eps")
            for i in range(fast.steps):
                print(f"{i + 1},{fast.c[i]},{fast.e[i]},{format_value(fast.eps[i])}")
        else:
            _print_table(
                ["n", "c", "e", "eps"],
                [
                    [str(i + 1), str(fast.c[i]), str(fast.e[i]), format_value(fast.eps[i])]
                    for i in range(fast.steps)
                ],
            )
            print(
                f"terminated={fast.terminated} n0={_opt(fast.n0)} steps={fast.steps}",
                file=sys.stderr,
            )
        return 0

    # naive
    if args.format == "json":
        for i, step in enumerate(naive, start=1):
            print(
                json.dumps(
                    {"n": i, "c": str(step.c), "e": str(step.e), "eps": format_value(step.eps)}
                )
            )
    elif args.format == "csv":
        print("n,c,e,eps")
        for i, step in enumerate(naive, start=1):
            print(f"{i},{step.c},{step.e},{format_value(step.eps)}")
    else:
        _print_table(
            ["n", "c", "e", "eps"],
            [
                [str(i), str(s.c), str(s.e), format_value(s.eps)]
                for i, s in enumerate(naive, start=1)
            ],
        )
    return 0


# ------------------------------------------------------------------ scan --


def _cmd_scan(args) -> int:
    def progress(q, rows):
        bad = [r for r in rows if r.status == "MAXITER"]
        for r in bad:
            print(
                f"MAXITER: {r.p}/{r.q} produced no zero gap within {args.maxiter} steps",
                file=sys.stderr,
            )
        if args.verbose:
            print(f"q={q}: {len(rows)} pairs", file=sys.stderr)

    summary = scan_conjecture(
        args.qmin,
        args.qmax,
        args.maxiter,
        args.out,
        jobs=args.jobs,
        resume=args.resume,
        progress=progress,
    )
    payload = {
        "q_min": summary.q_min,
        "q_max": summary.q_max,
        "pairs_total": summary.pairs_total,
        "pairs_zero": summary.pairs_zero,
        "pairs_maxiter": summary.pairs_maxiter,
        "n0_histogram": {str(k): v for k, v in summary.n0_histogram.items()},
        "max_c": summary.max_c,
        "wall_time_s": round(summary.wall_time_s, 3),
    }
    print(json.dumps(payload))
    return 0


# --------------------------------------------------------------- recover --


def _cmd_recover(args) -> int:
    records = recover_sequence(args.sum, args.beta, args.terms)
    rows = [
        {
            "n": rec.n,
            "a": str(rec.a),
            "x": format_value(rec.x),
            "delta": format_value(rec.delta),
            "threshold_met": rec.threshold_met,
        }
        for rec in records
    ]
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        print("n,a,x,delta,threshold_met")
        for row in rows:
            print(
                f"{row['n']},{row['a']},{row['x']},{row['delta']},{row['threshold_met']}"
            )
    else:
        _print_table(
            ["n", "a", "delta~", "threshold_met"],
            [
                [
                    str(rec.n),
                    str(rec.a),
                    to_decimal(rec.delta, 10),
                    str(rec.threshold_met),
                ]
                for rec in records
            ],
        )
    return 0


# ------------------------------------------------------------------- seq --


def _cmd_seq(args) -> int:
    if args.seq_kind == "sylvester":
        terms = sylvester_terms(args.m, args.terms)
        rows = [{"n": i, "value": str(v)} for i, v in enumerate(terms, start=1)]
    elif args.seq_kind == "fib2":
        rows = [
            {"n": n, "value": str(fib_pow2(n))} for n in range(1, args.terms + 1)
        ]
    else:  # growth
        est = growth_constant(args.m, args.depth)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "m": est.m,
                        "depth": est.depth,
                        "c_hat": est.c_hat,
                        "residual_bound": est.residual_bound,
                    }
                )
            )
        else:
            print(
                f"c_hat(m={est.m}, depth={est.depth}) = {est.c_hat}"
                f"  (|error| <= {est.residual_bound})"
            )
        return 0
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    else:
        _print_table(["n", "value"], [[str(r["n"]), r["value"]] for r in rows])
    return 0


# ------------------------------------------------------------------ walk --


def _cmd_walk(args) -> int:
    stats, hit_steps = run_walks(args.c0, args.steps, args.trials, args.seed)
    if args.hits_out:
        try:
            with open(args.hits_out, "w", newline="") as fh:
                fh.write("trial,hit_step\n")
                for i, h in enumerate(hit_steps):
                    fh.write(f"{i},{h if h >= 0 else ''}\n")
        except OSError as exc:
            raise IoError(f"cannot write hitting times to {args.hits_out}: {exc}") from exc
    print(
        json.dumps(
            {
                "trials": stats.trials,
                "steps": stats.steps,
                "c0": stats.c0,
                "mean_log_t": stats.mean_log_t,
                "stderr_log_t": stats.stderr_log_t,
                "hit_fraction": stats.hit_fraction,
                "mean_hit_time": stats.mean_hit_time,
                "seed": stats.seed,
                "generator_id": stats.generator_id,
            }
        )
    )
    return 0


# ---------------------------------------------------------------- parser --


def _add_format(sub, default="table"):
    sub.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default=default,
        help="output format (default: %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egyptfrac",
        description="Exact Egyptian-fraction expansions, gap sequences, and reciprocal-sum recovery.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="unit-fraction expansion of an exact value")
    p_expand.add_argument("--r", type=parse_value, required=True, metavar="VALUE",
                          help="exact value, e.g. 11/29 or '(5-1 sqrt 5)/2'")
    p_expand.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p_expand.add_argument("--terms", type=int, required=True, metavar="N")
    p_expand.add_argument("--digit-cap", type=int, default=None, metavar="K",
                          help=f"omit d beyond K decimal digits (default {DEFAULT_DIGIT_CAP}, env {DIGIT_CAP_ENV})")
    stop = p_expand.add_mutually_exclusive_group()
    stop.add_argument("--continue-past-zero", action="store_true", dest="continue_past_zero",
                      help="keep expanding past the first zero gap (default behaviour)")
    stop.add_argument("--stop-at-zero", action="store_true", dest="stop_at_zero",
                      help="truncate a rational pseudo-greedy stream at the first zero gap")
    _add_format(p_expand)
    p_expand.set_defaults(fn=_cmd_expand)

    p_gaps = sub.add_parser("gaps", help="gap sequence of a rational, fast and/or naive")
    p_gaps.add_argument("--r", type=_parse_pq, required=True, metavar="P/Q",
                        help="reduced rational p/q (unreduced input is rejected)")
    p_gaps.add_argument("--terms", type=int, required=True, metavar="N")
    p_gaps.add_argument("--method", choices=("fast", "naive", "both"), required=True)
    _add_format(p_gaps)
    p_gaps.set_defaults(fn=_cmd_gaps)

    p_scan = sub.add_parser("scan", help="scan all reduced p/q over a q range")
    p_scan.add_argument("--qmin", type=int, required=True)
    p_scan.add_argument("--qmax", type=int, required=True)
    p_scan.add_argument("--maxiter", type=int, required=True,
                        help="per-pair iteration budget before MAXITER status")
    p_scan.add_argument("--out", required=True, metavar="PATH")
    p_scan.add_argument("--resume", action="store_true",
                        help="reuse complete q values from an existing output file")
    p_scan.add_argument("--jobs", type=int, default=1, metavar="K")
    p_scan.add_argument("--verbose", action="store_true")
    p_scan.set_defaults(fn=_cmd_scan)

    p_recover = sub.add_parser("recover", help="recover a sequence from its reciprocal sum")
    p_recover.add_argument("--sum", type=parse_value, required=True, metavar="VALUE")
    p_recover.add_argument("--beta", type=parse_value, required=True, metavar="VALUE")
    p_recover.add_argument("--terms", type=int, required=True, metavar="N")
    _add_format(p_recover)
    p_recover.set_defaults(fn=_cmd_recover)

    p_seq = sub.add_parser("seq", help="reference sequences and growth constant")
    seq_sub = p_seq.add_subparsers(dest="seq_kind", required=True)
    s_syl = seq_sub.add_parser("sylvester")
    s_syl.add_argument("--m", type=int, required=True)
    s_syl.add_argument("--terms", type=int, required=True)
    _add_format(s_syl)
    s_fib = seq_sub.add_parser("fib2")
    s_fib.add_argument("--terms", type=int, required=True)
    _add_format(s_fib)
    s_gro = seq_sub.add_parser("growth")
    s_gro.add_argument("--m", type=int, required=True)
    s_gro.add_argument("--depth", type=int, required=True)
    _add_format(s_gro)
    p_seq.set_defaults(fn=_cmd_seq)

    p_walk = sub.add_parser("walk", help="multiplicative random-walk simulation")
    p_walk.add_argument("--c0", type=float, required=True)
    p_walk.add_argument("--steps", type=int, required=True)
    p_walk.add_argument("--trials", type=int, required=True)
    p_walk.add_argument("--seed", type=int, required=True)
    p_walk.add_argument("--hits-out", metavar="PATH", default=None,
                        help="write per-trial hitting times as CSV")
    p_walk.set_defaults(fn=_cmd_walk)

    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # expansions legitimately print huge integers
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (EgyptError, ZeroDivisionError, ValueError, OverflowError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
