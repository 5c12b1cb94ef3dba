"""Command-line surface: censuses, closed-form counters, curve point
counts, quadratic-form reports, spectral analysis, verification suites and
table emission.

JSON is the canonical machine format (integers serialized as decimal
strings); CSV and Markdown are views.  Exit codes: 0 success / all checks
pass, 1 verification mismatch, 2 usage or budget error.  Output is
byte-deterministic for fixed arguments; wall-clock timing is only added on
request and goes to stderr.
"""

import argparse
import csv
import json
import os
import sys
import time

from . import closedforms as cf
from . import curves, fourier, quadforms, traces, verify
from .field import DEFAULT_ENUM_CAP, BudgetError

ENV_BUDGET = "TRACE3_MAX_BITS"

_FAMILY = {"c1": 1, "c2": 2, "c3": 3}


def _emit(payload, fmt="json"):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        raise ValueError(f"unsupported format {fmt}")


def _census_rows(census):
    return [(t1, t2, t3, c) for t1, t2, t3, c in census.rows()]


def cmd_count_traces(args):
    census = traces.trace_census(args.r, args.n, args.which, cap=args.max_bits)
    rows = _census_rows(census)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["t1_bits", "t2_bits", "t3_bits", "count"])
        writer.writerows(rows)
    else:
        _emit({"r": args.r, "n": args.n, "which": args.which,
               "total": str(census.total),
               "rows": traces.census_rows_json(census)})
    return 0


def cmd_count_irreducibles(args):
    r = args.q.bit_length() - 1
    if 1 << r != args.q:
        raise ValueError("q must be a power of two")
    value = traces.count_irreducibles_with_prefix(
        r, args.n, args.t1, args.t2, args.t3, budget=1 << args.max_bits)
    _emit({"q": args.q, "n": args.n,
           "prefix": [args.t1, args.t2, args.t3], "count": str(value)})
    return 0


def cmd_formula(args):
    kind = args.kind
    if kind == "gauss":
        value = cf.gauss_count(args.q, args.n)
        params = {"q": args.q, "n": args.n}
    elif kind == "carlitz":
        value = cf.carlitz_count(args.q, args.n, args.t1)
        params = {"q": args.q, "n": args.n, "t1": args.t1}
    elif kind == "F000":
        value = cf.count_all_zero_traces(args.r, args.n)
        params = {"r": args.r, "n": args.n}
    elif kind == "I000":
        r = args.q.bit_length() - 1
        if 1 << r != args.q:
            raise ValueError("q must be a power of two")
        value = cf.irreducible_all_zero(r, args.n)
        params = {"q": args.q, "n": args.n}
    elif kind == "table1":
        value = cf.two_trace_deviation(args.n, args.t1, args.t2)
        params = {"n": args.n, "t1": args.t1, "t2": args.t2}
    elif kind == "table2":
        value = cf.three_trace_deviation(args.n, args.t1, args.t2, args.t3)
        params = {"n": args.n, "t1": args.t1, "t2": args.t2, "t3": args.t3}
    else:
        raise ValueError(f"unknown formula {kind}")
    _emit({"formula": kind, "params": params, "value": str(value)})
    return 0


def cmd_curve_count(args):
    family = _FAMILY[args.family]
    methods = (["oracle", "table", "charpoly", "fourier", "quadform"]
               if args.method == "all" else [args.method])
    counts = {}
    for method in methods:
        if args.alpha is None:
            if method == "quadform":
                if args.method != "all":
                    raise ValueError("quadform route applies to twists only")
                continue
            if method == "oracle":
                spec = curves.CurveSpec(family, args.r)
                counts[method] = curves.count_points_oracle(
                    spec, args.n, cap=args.max_bits)
            elif method == "table":
                counts[method] = curves.closed_count_combined(
                    family, args.r, args.n)
            elif method == "charpoly":
                counts[method] = curves.charpoly_count(family, args.r, args.n)
            else:
                counts[method] = curves.spectral_count(family, args.r, args.n)
        else:
            if method in ("charpoly", "fourier"):
                if args.method != "all":
                    raise ValueError(f"{method} route covers combined curves only")
                continue
            if method == "oracle":
                spec = curves.CurveSpec(family, args.r, args.alpha)
                counts[method] = curves.count_points_oracle(
                    spec, args.n, cap=args.max_bits)
            elif method == "table":
                counts[method] = curves.closed_count_twist(
                    family, args.r, args.n, alpha=args.alpha)
            else:
                rep = quadforms.radical_report(
                    quadforms.twist_form(family, args.r, args.n, args.alpha))
                counts[method] = rep.twist_count
    agree = len(set(counts.values())) == 1
    g = curves.genus(curves.CurveSpec(family, args.r, args.alpha))
    payload = {
        "family": args.family, "r": args.r, "n": args.n,
        "alpha": args.alpha,
        "counts": {k: str(v) for k, v in sorted(counts.items())},
        "agree": agree,
        "hasse_weil": all(curves.hasse_weil_ok(v, g, args.r, args.n)
                          for v in counts.values()),
    }
    if args.alpha is not None:
        payload["alpha_class"] = curves.alpha_class(family, args.r, args.alpha)
    _emit(payload)
    return 0 if agree else 1


def cmd_curve_charpoly(args):
    family = _FAMILY[args.family]
    fd = curves.frobenius_charpoly(family, args.r)
    _emit({
        "family": args.family, "r": args.r, "genus": str(fd.genus),
        "degree": fd.degree,
        "factors": [{"coefficients": [str(c) for c in coeffs],
                     "multiplicity": str(mult)} for coeffs, mult in fd.factors],
        "supersingular": curves.supersingularity_certificate(fd),
    })
    return 0


def cmd_quadform_report(args):
    family = _FAMILY[args.family]
    qf = quadforms.twist_form(family, args.r, args.n, args.alpha)
    rep = quadforms.radical_report(qf)
    _emit({
        "family": args.family, "r": args.r, "n": args.n, "alpha": args.alpha,
        "alpha_class": curves.alpha_class(family, args.r, args.alpha),
        "m": rep.m, "w": rep.w, "w0": rep.w0, "rank": rep.rank,
        "sign": rep.sign, "zero_count": str(rep.zero_count),
        "twist_count": str(rep.twist_count),
    })
    return 0


def cmd_fourier_analyze(args):
    rows = []
    with open(args.input, newline="") as handle:
        for row in csv.reader(handle):
            if not row or not row[0].strip().lstrip("-").isdigit():
                continue  # header or blank
            rows.append((int(row[0]), int(row[1])))
    rows.sort()
    if not rows:
        raise ValueError("no data rows in input")
    n0 = rows[0][0]
    if [n for n, _ in rows] != list(range(n0, n0 + len(rows))):
        raise ValueError("input must cover consecutive n")
    candidates = (tuple(int(p) for p in args.period_candidates.split(","))
                  if args.period_candidates else fourier.DEFAULT_PERIOD_CANDIDATES)
    formula = fourier.analyze_sequence([f for _, f in rows], n0, args.q,
                                       candidates=candidates)
    coeffs = []
    for k, c in enumerate(formula.coeffs):
        if c.is_zero():
            continue
        if c.is_rational():
            val = c.as_rational()
            coeffs.append({"k": k, "numerator": str(val.numerator),
                           "denominator": str(val.denominator)})
        else:
            coeffs.append({"k": k, "coordinates": [
                [str(x.numerator), str(x.denominator)] for x in c.coords]})
    _emit({"q": args.q, "period": formula.period, "order": formula.order,
           "coefficients": coeffs})
    return 0


def cmd_verify(args):
    started = time.time()
    report = verify.run_suite(args.suite, max_bits=args.max_bits,
                              threads=args.threads)
    if args.timing:
        report["wall_time_ms"] = int(1000 * (time.time() - started))
    print(json.dumps(report, indent=2, sort_keys=True))
    summary = report["summary"]
    print(f"suite={args.suite} max_bits={args.max_bits} "
          f"passed={summary['passed']}/{summary['total']} "
          f"({time.time() - started:.1f}s)", file=sys.stderr)
    return 0 if summary["failed"] == 0 else 1


def _parse_range(text):
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi) + 1)


def _table_definition(which):
    if which == "1":
        classes = [(0, 0), (0, 1), (1, 0), (1, 1)]
        return {
            "period": 8, "parities": False,
            "columns": [f"t1={a},t2={b}" for a, b in classes],
            "symbolic": lambda res, p: [cf.two_trace_symbolic(res, a, b)
                                        for a, b in classes],
            "value": lambda r, n: [str(cf.two_trace_deviation(n, a, b))
                                   for a, b in classes],
            "n_min": 2,
        }
    if which == "2":
        classes = [(0, 0), (0, 1), (1, 0), (1, 1)]
        return {
            "period": 24, "parities": False,
            "columns": [f"t2={a},t3={b}" for a, b in classes],
            "symbolic": lambda res, p: [cf.three_trace_symbolic(res, a, b)
                                        for a, b in classes],
            "value": lambda r, n: [str(cf.three_trace_deviation(n, 0, a, b))
                                   for a, b in classes],
            "n_min": 3,
        }
    if which == "5":
        return {
            "period": 24, "parities": True,
            "columns": ["value"],
            "symbolic": lambda res, p: [cf.f000_symbolic(res, p)],
            "value": lambda r, n: [str(cf.count_all_zero_traces(r, n))],
            "n_min": 1,
        }
    if which in ("3", "4", "c3"):
        family = {"3": 1, "4": 2, "c3": 3}[which]
        return {
            "period": 8 if family == 1 else 24, "parities": True,
            "columns": ["value"],
            "symbolic": lambda res, p: [curves.combined_symbolic(family, res, p)],
            "value": lambda r, n: [str(curves.closed_count_combined(family, r, n))],
            "n_min": 1,
        }
    if which == "c3noroot":
        return {
            "period": 24, "parities": True,
            "columns": ["value"],
            "symbolic": lambda res, p: [curves.noroot_symbolic(res, p)],
            "value": lambda r, n: [str(curves.closed_count_twist(
                3, r, n, klass="0-roots"))],
            "n_min": 1,
        }
    raise ValueError(f"unknown table {which}")


def cmd_emit_table(args):
    spec = _table_definition(args.which)
    if args.n_range:
        if args.r is None:
            raise ValueError("--n-range needs --r")
        header = ["n"] + spec["columns"]
        rows = [[str(n)] + spec["value"](args.r, n)
                for n in _parse_range(args.n_range) if n >= spec["n_min"]]
    else:
        if spec["parities"]:
            header = ["n mod " + str(spec["period"]), "r odd", "r even"]
            rows = [[str(res)]
                    + [", ".join(spec["symbolic"](res, p)) for p in ("odd", "even")]
                    for res in range(spec["period"])]
        else:
            header = ["n mod " + str(spec["period"])] + spec["columns"]
            rows = [[str(res)] + spec["symbolic"](res, None)
                    for res in range(spec["period"])]
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    elif args.format == "md":
        print("| " + " | ".join(header) + " |")
        print("|" + "|".join("---" for _ in header) + "|")
        for row in rows:
            print("| " + " | ".join(row) + " |")
    else:
        _emit({"table": args.which, "header": header, "rows": rows})
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trace3",
        description="Exact counts of binary-field elements and irreducible "
                    "polynomials by their first three traces, cross-verified "
                    "through supersingular curve point counts.")
    parser.add_argument("--max-bits", type=int,
                        default=int(os.environ.get(ENV_BUDGET, DEFAULT_ENUM_CAP)),
                        help="enumeration budget in bits (env TRACE3_MAX_BITS)")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for verification sweeps")
    parser.add_argument("--config", help="JSON file with defaults for any flag")
    # the same flags are accepted after a subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-bits", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--config", default=argparse.SUPPRESS)

    def add_parser(owner, name, **kwargs):
        return owner.add_parser(name, parents=[common], **kwargs)

    sub = parser.add_subparsers(dest="command", required=True)

    p = add_parser(sub, "count-traces", help="exhaustive trace census")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("one", "two", "three"), default="three")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_count_traces)

    p = add_parser(sub, "count-irreducibles",
                       help="enumerate irreducibles with a prescribed prefix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t1", type=int, default=0)
    p.add_argument("--t2", type=int, default=0)
    p.add_argument("--t3", type=int, default=0)
    p.set_defaults(func=cmd_count_irreducibles)

    p = add_parser(sub, "formula", help="evaluate a closed-form counter")
    p.add_argument("kind", choices=("F000", "I000", "gauss", "carlitz",
                                    "table1", "table2"))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t1", type=int, default=0)
    p.add_argument("--t2", type=int, default=0)
    p.add_argument("--t3", type=int, default=0)
    p.set_defaults(func=cmd_formula)

    curve = sub.add_parser("curve", help="curve point counts")
    curve_sub = curve.add_subparsers(dest="curve_command", required=True)
    p = add_parser(curve_sub, "count")
    p.add_argument("--family", choices=("c1", "c2", "c3"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--method", default="all",
                   choices=("oracle", "table", "charpoly", "fourier",
                            "quadform", "all"))
    p.set_defaults(func=cmd_curve_count)
    p = add_parser(curve_sub, "charpoly")
    p.add_argument("--family", choices=("c1", "c2", "c3"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_curve_charpoly)

    quad = sub.add_parser("quadform", help="quadratic-form reports")
    quad_sub = quad.add_subparsers(dest="quadform_command", required=True)
    p = add_parser(quad_sub, "report")
    p.add_argument("--family", choices=("c1", "c2", "c3"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=1)
    p.set_defaults(func=cmd_quadform_report)

    four = sub.add_parser("fourier", help="spectral analysis of sequences")
    four_sub = four.add_subparsers(dest="fourier_command", required=True)
    p = add_parser(four_sub, "analyze")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--input", required=True, help="CSV rows n,value")
    p.add_argument("--period-candidates", default=None)
    p.set_defaults(func=cmd_fourier_analyze)

    p = add_parser(sub, "verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=("tables", "curves", "quadforms", "fourier", "all"))
    p.add_argument("--timing", action="store_true",
                   help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = add_parser(sub, "emit-table", help="print a residue table")
    p.add_argument("which", choices=("1", "2", "3", "4", "5", "c3", "c3noroot"))
    p.add_argument("--r", type=int)
    p.add_argument("--n-range", help="evaluate rows for n in a..b")
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.set_defaults(func=cmd_emit_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config) as handle:
            defaults = json.load(handle)
        for key, value in defaults.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr) and parser.get_default(attr) == getattr(args, attr):
                setattr(args, attr, value)
    try:
        return args.func(args)
    except (BudgetError,) as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
