"""Command-line front end.

Subcommands: construct {grid|power-sum|elekes|tp2xn}, verify, census,
count-equal, rects, mu, scan, check-st.  Exit codes: 0 success,
1 precondition/verification failure, 2 I/O or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import analysis, constructions, counting, exact


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write_output(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _int_list(s):
    return [int(x) for x in s.split(",") if x.strip()]


def _frac_list(s):
    return [Fraction(x) for x in s.split(",") if x.strip()]


def cmd_construct(args):
    if args.what == "grid":
        A = constructions.grid_matrix(args.n)
        _write_output(args.out, exact.matrix_to_text(A))
    elif args.what == "power-sum":
        if args.a is not None and args.b is not None:
            a, b = _frac_list(args.a), _frac_list(args.b)
        elif args.n is not None:
            a = list(range(1, args.n + 1))
            b = list(range(args.n, 0, -1))
        else:
            raise ValueError("power-sum needs --a/--b or --n")
        A = constructions.power_sum_matrix(a, b, args.k)
        _write_output(args.out, exact.matrix_to_text(A))
    elif args.what == "elekes":
        cfg = constructions.elekes_config(args.N)
        if args.canonical:
            cfg = constructions.canonicalize_config(cfg, seed=args.seed)
        _write_output(args.out, constructions.config_to_json(cfg) + "\n")
    elif args.what == "tp2xn":
        cfg = constructions.elekes_config(args.N)
        cfg = constructions.canonicalize_config(cfg, seed=args.seed)
        A = constructions.assemble_tp_2xn(cfg)
        _write_output(args.out, exact.matrix_to_text(A))
    else:
        raise ValueError("unknown construct target %r" % args.what)
    return 0


def cmd_verify(args):
    A = exact.matrix_from_text(_read_input(args.input))
    if args.contiguous:
        verdict = exact.verify_tp_contiguous(A)
    else:
        verdict = exact.verify_tp(A, args.order)
    if verdict.ok:
        _write_output(args.out, "TP ok (%dx%d)\n" % (A.rows, A.cols))
        return 0
    k, I, J, v = verdict.witness
    _write_output(
        args.out,
        "not TP: order %d minor at rows %r cols %r has value %s\n" % (k, I, J, v),
    )
    return 1


def _census_threaded(A, k, scope, threads):
    if threads <= 1:
        return counting.minor_census(A, k, scope)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda i: counting.minor_census(A, k, scope, part=(i, threads)),
            range(threads),
        )
        return counting.merge_censuses(parts)


def cmd_census(args):
    A = exact.matrix_from_text(_read_input(args.input))
    census = _census_threaded(A, args.order, args.scope, args.threads)
    if args.format == "json":
        _write_output(args.out, counting.census_to_json(census) + "\n")
    else:
        _write_output(args.out, counting.census_to_csv(census))
    return 0


def cmd_count_equal(args):
    A = exact.matrix_from_text(_read_input(args.input))
    census = _census_threaded(A, args.order, args.scope, args.threads)
    _write_output(args.out, "%d\n" % census[Fraction(args.value)])
    return 0


def cmd_rects(args):
    pts = constructions.points_from_json(_read_input(args.input))
    n = counting.unit_rectangles(pts, Fraction(args.area), mode=args.mode)
    _write_output(args.out, "%d\n" % n)
    return 0


def cmd_mu(args):
    doc = json.loads(_read_input(args.input))
    if "A" in doc and "B" in doc:
        A = counting.as_multiset(Fraction(v) for v in doc["A"])
        B = counting.as_multiset(Fraction(v) for v in doc["B"])
        result = counting.mu(
            counting.multiset_prod(counting.multiset_diff(A, A), counting.multiset_diff(B, B))
        )
    elif "values" in doc:
        result = counting.mu(Fraction(v) for v in doc["values"])
    else:
        raise ValueError('mu input needs keys "A"/"B" or "values"')
    _write_output(args.out, "%d\n" % result)
    return 0


def cmd_scan(args):
    cfg = analysis.RunConfig(
        family=args.family,
        sizes=tuple(_int_list(args.sizes)),
        seed=args.seed,
        mode=args.mode,
        area=Fraction(args.area),
    )
    report = analysis.scan_exponent(cfg)
    if args.format == "json":
        _write_output(args.out, analysis.report_to_json(report) + "\n")
    else:
        _write_output(args.out, analysis.report_to_csv(report))
    return 1 if report.partial_error else 0


def cmd_check_st(args):
    ok = analysis.st_bound_check(args.m, args.n, args.incidences, Fraction(args.constant))
    _write_output(args.out, ("ok\n" if ok else "violated\n"))
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="tpminors")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a matrix or configuration")
    c.add_argument("what", choices=("grid", "power-sum", "elekes", "tp2xn"))
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--N", type=int, default=2)
    c.add_argument("--a", default=None, help="comma-separated increasing rationals")
    c.add_argument("--b", default=None, help="comma-separated decreasing rationals")
    c.add_argument("--canonical", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="total-positivity check of a matrix file")
    v.add_argument("--input", default=None)
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--contiguous", action="store_true")
    v.set_defaults(func=cmd_verify)

    ce = sub.add_parser("census", help="minor-value census")
    ce.add_argument("--input", default=None)
    ce.add_argument("--order", type=int, required=True)
    ce.add_argument("--scope", choices=counting.SCOPES, default="all-pairs")
    ce.set_defaults(func=cmd_census)

    cq = sub.add_parser("count-equal", help="number of minors equal to a value")
    cq.add_argument("--input", default=None)
    cq.add_argument("--order", type=int, required=True)
    cq.add_argument("--value", default="1")
    cq.add_argument("--scope", choices=counting.SCOPES, default="all-pairs")
    cq.set_defaults(func=cmd_count_equal)

    r = sub.add_parser("rects", help="axis-parallel rectangle count for a point set")
    r.add_argument("--input", default=None)
    r.add_argument("--area", default="1")
    r.add_argument("--mode", choices=("diagonal", "both-diagonals"), default="diagonal")
    r.set_defaults(func=cmd_rects)

    m = sub.add_parser("mu", help="maximum multiplicity of a multiset expression")
    m.add_argument("--input", default=None)
    m.set_defaults(func=cmd_mu)

    s = sub.add_parser("scan", help="size scan with log-log exponent fit")
    s.add_argument("--family", choices=analysis.FAMILIES, required=True)
    s.add_argument("--sizes", required=True, help="comma-separated increasing sizes")
    s.add_argument("--mode", choices=("diagonal", "both-diagonals"), default="diagonal")
    s.add_argument("--area", default="1")
    s.set_defaults(func=cmd_scan)

    st = sub.add_parser("check-st", help="exact incidence-bound sanity check")
    st.add_argument("--m", type=int, required=True)
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--incidences", type=int, required=True)
    st.add_argument("--constant", default="5/2")
    st.set_defaults(func=cmd_check_st)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, constructions.CanonicalizationError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as e:
        print("i/o error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
