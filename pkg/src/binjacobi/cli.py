"""Command line front end.

    binjacobi eval [--alg ALG] B A      print (B|A) as -1, 0 or 1
    binjacobi trace [--alg ALG] B A     one line per iteration
    binjacobi search --max-bits N       worst cases over max(a, b) < 2^n
    binjacobi stats --bits N --count N  class percentages on random pairs
    binjacobi bench --csv PATH          timings as CSV (+ a PNG next to it)
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from binjacobi import harness
from binjacobi.core import ALGORITHMS, InvalidInput, check_modulus, jacobi, normalize


def parse_int(text: str) -> int:
    t = text.strip()
    neg = t.startswith("-")
    body = t[1:] if neg else t
    try:
        if body[:2].lower() == "0x":
            value = int(body[2:], 16)
        elif body.isdigit():
            value = int(body, 10)
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal or 0x-hex integer: {text!r}") from None
    return -value if neg else value


def _int_list(text: str):
    return [parse_int(x) for x in text.split(",") if x.strip()]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="binjacobi", description="Jacobi symbol via binary GCD.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, default, choices, text in (
            ("eval", "fast", ALGORITHMS, "print (B|A) as -1, 0 or 1"),
            ("trace", "cubic", ("cubic", "quadratic"), "print one line per iteration")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--alg", choices=choices, default=default)
        sp.add_argument("b", metavar="B", help="decimal or 0x-hex, may be negative")
        sp.add_argument("a", metavar="A", help="odd positive modulus")

    sp = sub.add_parser("search", help="exhaustive worst-case iteration counts")
    sp.add_argument("--max-bits", type=int, default=10, help="rows n = 1..N over a, b < 2^n")
    sp.add_argument("--alg", choices=("cubic", "quadratic", "fast"), default="cubic")
    sp.add_argument("--cap", type=int, default=harness.SEARCH_CAP, help="refuse N above this")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--plot", metavar="PATH", help="write a PNG of max iterations against n")

    sp = sub.add_parser("stats", help="iteration class percentages on random pairs")
    sp.add_argument("--bits", type=int, default=60)
    sp.add_argument("--count", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--alg", choices=("cubic", "quadratic"), default="cubic")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--plot", metavar="PATH", help="write a PNG bar chart of class fractions")

    sp = sub.add_parser("bench", help="time algorithms, emit CSV")
    sp.add_argument("--sizes", type=_int_list, default=[1000, 10000, 100000],
                    help="comma-separated bit sizes")
    sp.add_argument("--bits", type=int, help="benchmark a single size")
    sp.add_argument("--algs", type=lambda s: s.split(","), default=["fast", "oracle", "quadratic"],
                    help="comma-separated subset of " + ",".join(ALGORITHMS))
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--repeats", type=int, default=1)
    sp.add_argument("--csv", metavar="PATH", help="write CSV here and a .png figure alongside")
    sp.add_argument("--no-plot", action="store_true")
    return p


def _operands(args):
    try:
        b, a = parse_int(args.b), parse_int(args.a)
    except argparse.ArgumentTypeError as exc:
        raise InvalidInput(str(exc)) from None
    check_modulus(a)
    return b, a


def _cmd_eval(args, out):
    b, a = _operands(args)
    print(jacobi(b, a, args.alg), file=out)


def _cmd_trace(args, out):
    from binjacobi.cubic import TraceRecorder, cubic_run
    from binjacobi.quadratic import quadratic_run

    runs = {"cubic": cubic_run, "quadratic": quadratic_run}
    if args.alg not in runs:
        raise InvalidInput("trace supports --alg cubic or quadratic")
    b, a = _operands(args)
    early, b, s = normalize(b, a)
    if early is not None:
        return
    rec = TraceRecorder()
    runs[args.alg](a, b, rec)
    for r in rec.records:
        print(r.line(), file=out)


def _cmd_search(args, out):
    rows = harness.run_exhaustive_search(args.max_bits, args.alg, cap=args.cap, workers=args.workers)
    out.write(harness.format_search(rows, args.alg))
    if args.plot:
        from binjacobi.plots import plot_worst_cases
        plot_worst_cases(rows, args.plot, args.alg)


def _cmd_stats(args, out):
    report = harness.run_sample_stats(args.bits, args.count, args.seed, args.alg, workers=args.workers)
    out.write(report.format())
    if args.plot:
        from binjacobi.plots import plot_class_fractions
        plot_class_fractions(report, args.plot)


def _cmd_bench(args, out):
    sizes = [args.bits] if args.bits else args.sizes
    for alg in args.algs:
        if alg not in ALGORITHMS:
            raise InvalidInput(f"unknown algorithm {alg!r}")
    rows = harness.run_bench(sizes, args.algs, args.seed, repeats=args.repeats)
    if args.csv:
        path = Path(args.csv)
        with open(path, "w", newline="") as fh:
            harness.write_bench_csv(rows, fh)
        if not args.no_plot:
            from binjacobi.plots import plot_bench
            plot_bench(rows, path.with_suffix(".png"))
    else:
        harness.write_bench_csv(rows, out)


_COMMANDS = {"eval": _cmd_eval, "trace": _cmd_trace, "search": _cmd_search,
             "stats": _cmd_stats, "bench": _cmd_bench}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args, out)
    except InvalidInput as exc:
        print(f"binjacobi: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
