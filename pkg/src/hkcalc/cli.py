"""Command-line interface.

Verbs: gb, dim, colength, local-colength, mult, hk, ehk, check, corpus.
Results go to stdout as JSON (default) or CSV (--format csv); diagnostics
go to stderr.  Exit codes: 0 success/PASS, 1 a check FAILED, 2 input error,
3 resource limit, 4 stabilization/certification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import groebner, lengths
from .checks import (
    FAIL,
    INAPPLICABLE,
    check_flatness,
    check_kunz,
    check_lemma21,
    check_rescaling,
    check_thm23,
    check_thm33,
)
from .errors import CertificationError, InputError, ResourceLimitError
from .fixtures import corpus, fixture_by_id
from .hk import ehk_estimate, hk_function
from .lengths import (
    INFINITE,
    colength,
    dimension,
    hilbert_samuel,
    is_finite,
    local_colength,
)
from .parser import parse_session

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_CERTIFICATION = 4


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if value is INFINITE:
        return "INFINITE"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def _emit_json(payload):
    sys.stdout.write(json.dumps(_jsonable(payload), indent=2) + "\n")


def _emit_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _length_str(value):
    return "INFINITE" if not is_finite(value) else str(value)


def _load_session(args):
    try:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (args.infile, exc)) from None
    return parse_session(text)


def _ring(session, args):
    return session.build_ring(order_kind=getattr(args, "order", None))


def _q_list(raw):
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise InputError("--q must be a comma-separated list of integers") from None


def _check_report_out(report, args):
    payload = report.to_dict()
    if args.format == "csv":
        rows = [(payload["check"], payload["verdict"], "detail", payload["detail"])]
        for key, value in payload["quantities"].items():
            if isinstance(value, dict):  # exact rational
                value = "%s/%s" % (value["num"], value["den"])
            rows.append((payload["check"], payload["verdict"], key, value))
        _emit_csv(("check", "verdict", "key", "value"), rows)
    else:
        _emit_json(payload)
    if report.verdict == FAIL:
        return EXIT_CHECK_FAILED
    if report.verdict == INAPPLICABLE:
        print("inapplicable: %s" % report.detail, file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_OK


# -- verb implementations -----------------------------------------------------


def _cmd_gb(args):
    session = _load_session(args)
    ring = _ring(session, args)
    ideal = session.ideal(args.ideal, ring)
    basis = ideal.gb()
    names = ring.variables
    polys = [g.render(names) for g in basis.elements]
    if args.format == "csv":
        _emit_csv(("index", "polynomial"), list(enumerate(polys)))
    else:
        _emit_json({"ring": repr(ring), "ideal": args.ideal, "basis": polys})
    return EXIT_OK


def _cmd_scalar(args, fn, label):
    session = _load_session(args)
    ring = _ring(session, args)
    ideal = session.ideal(args.ideal, ring)
    value = fn(ideal)
    if args.format == "csv":
        _emit_csv(("ideal", label), [(args.ideal, _length_str(value))])
    else:
        _emit_json({"ring": repr(ring), "ideal": args.ideal, label: value})
    return EXIT_OK


def _cmd_mult(args):
    session = _load_session(args)
    ring = _ring(session, args)
    ideal = session.ideal(args.ideal, ring)
    x = session.param(args.param, ring)
    result = hilbert_samuel(x, ideal)
    payload = {
        "ring": repr(ring),
        "ideal": args.ideal,
        "param": args.param,
        "multiplicity": result.value,
        "stabilized_at": result.stabilized_at,
        "certified": result.certified,
    }
    if args.format == "csv":
        _emit_csv(
            ("ideal", "param", "multiplicity", "stabilized_at", "certified"),
            [(args.ideal, args.param, result.value, result.stabilized_at, result.certified)],
        )
    else:
        _emit_json(payload)
    return EXIT_OK


def _hk_rows_csv(report):
    return [
        (row.e, row.q, row.colength, row.ratio.numerator, row.ratio.denominator)
        for row in report.rows
    ]


def _cmd_hk(args):
    session = _load_session(args)
    ring = _ring(session, args)
    ideal = session.ideal(args.ideal, ring)
    report = hk_function(ideal, args.emax)
    if args.format == "csv":
        _emit_csv(("e", "q", "colength", "ratio_num", "ratio_den"), _hk_rows_csv(report))
    else:
        _emit_json(
            {
                "ring": report.ring_desc,
                "ideal": args.ideal,
                "d": report.d,
                "rows": [
                    {"e": r.e, "q": r.q, "colength": r.colength, "ratio": r.ratio}
                    for r in report.rows
                ],
                "estimate": report.estimate if report.estimate is not None else "ABSENT",
                "estimate_method": report.estimate_method,
            }
        )
    return EXIT_OK


def _cmd_ehk(args):
    session = _load_session(args)
    ring = _ring(session, args)
    ideal = session.ideal(args.ideal, ring)
    est = ehk_estimate(ideal, args.emax)
    if args.format == "csv":
        _emit_csv(
            ("estimate_num", "estimate_den", "last_ratio_num", "last_ratio_den", "gap_num", "gap_den", "method"),
            [
                (
                    est.estimate.numerator,
                    est.estimate.denominator,
                    est.last_ratio.numerator,
                    est.last_ratio.denominator,
                    est.gap.numerator,
                    est.gap.denominator,
                    est.method,
                )
            ],
        )
    else:
        _emit_json(
            {
                "ring": est.report.ring_desc,
                "ideal": args.ideal,
                "d": est.report.d,
                "estimate": est.estimate,
                "last_ratio": est.last_ratio,
                "gap": est.gap,
                "method": est.method,
                "rows": [
                    {"e": r.e, "q": r.q, "colength": r.colength, "ratio": r.ratio}
                    for r in est.report.rows
                ],
            }
        )
    return EXIT_OK


def _cmd_check(args):
    session = _load_session(args)
    ring = _ring(session, args)
    which = args.which
    if which == "kunz":
        report = check_kunz(ring, _q_list(args.q))
    elif which == "flatness":
        qs = _q_list(args.q)
        if len(qs) != 1:
            raise InputError("flatness takes exactly one q")
        report = check_flatness(ring, session.ideal(args.ideal, ring), qs[0])
    elif which == "lemma21":
        report = check_lemma21(
            session.ideal(args.ideal, ring),
            session.ideal(args.ideal_j, ring),
            _q_list(args.q),
        )
    elif which == "thm23":
        primes = []
        if args.primes:
            for name in args.primes.split(","):
                prime, _height = session.prime(name.strip(), ring)
                primes.append(prime)
        report = check_thm23(
            session.ideal(args.ideal_j, ring),
            session.param(args.param, ring),
            primes,
            args.emax,
        )
    elif which == "thm33":
        prime, _height = session.prime(args.prime, ring)
        report = check_thm33(prime, session.param(args.param, ring), _q_list(args.q))
    elif which == "rescaling":
        report = check_rescaling(ring, args.e)
    else:
        raise InputError("unknown check %r" % which)
    return _check_report_out(report, args)


def _cmd_corpus(args):
    if args.action == "list":
        items = [
            {"fixture": f.fixture_id, "description": f.description} for f in corpus()
        ]
        if args.format == "csv":
            _emit_csv(("fixture", "description"), [(i["fixture"], i["description"]) for i in items])
        else:
            _emit_json({"fixtures": items})
        return EXIT_OK
    if not args.all and not args.id:
        raise InputError("corpus run needs --all or --id <fixture>")
    fixtures = corpus() if args.all else [fixture_by_id(args.id)]
    results = [f.run(seed=args.seed) for f in fixtures]
    passed = all(r["passed"] for r in results)
    payload = {
        "seed": args.seed,
        "total": len(results),
        "passed": sum(1 for r in results if r["passed"]),
        "failed": sum(1 for r in results if not r["passed"]),
        "results": results,
    }
    if args.format == "csv":
        rows = [(r["fixture"], "PASS" if r["passed"] else "FAIL") for r in results]
        _emit_csv(("fixture", "status"), rows)
    else:
        _emit_json(payload)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


# -- argument parsing ---------------------------------------------------------


def _add_common(sp, session_file=True, ideal=False):
    if session_file:
        sp.add_argument("--in", dest="infile", required=True, help="session file in the ring/ideal DSL")
    if ideal:
        sp.add_argument("--ideal", required=True, help="named ideal from the session")
    sp.add_argument("--order", choices=("grevlex", "lex", "grlex"), default=None, help="override the session's monomial order")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--spair-cap", type=int, default=None, help="S-pair generation cap")
    sp.add_argument("--n-cap", type=int, default=None, help="local-colength stabilization cap")
    sp.add_argument("--jobs", type=int, default=1, help="parallelism bound (execution is sequential and deterministic)")


def build_arg_parser():
    ap = argparse.ArgumentParser(prog="hkcalc", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("gb", help="reduced Groebner basis of a named ideal")
    _add_common(sp, ideal=True)
    sp.set_defaults(fn=_cmd_gb)

    sp = sub.add_parser("dim", help="Krull dimension of ring/(relations + ideal)")
    _add_common(sp, ideal=True)
    sp.set_defaults(fn=lambda a: _cmd_scalar(a, dimension, "dimension"))

    sp = sub.add_parser("colength", help="global colength (standard monomial count)")
    _add_common(sp, ideal=True)
    sp.set_defaults(fn=lambda a: _cmd_scalar(a, colength, "colength"))

    sp = sub.add_parser("local-colength", help="colength over the localization at the origin")
    _add_common(sp, ideal=True)
    sp.set_defaults(fn=lambda a: _cmd_scalar(a, local_colength, "local_colength"))

    sp = sub.add_parser("mult", help="Hilbert-Samuel multiplicity of a parameter")
    _add_common(sp, ideal=True)
    sp.add_argument("--param", required=True, help="named parameter element")
    sp.set_defaults(fn=_cmd_mult)

    sp = sub.add_parser("hk", help="Hilbert-Kunz function table")
    _add_common(sp, ideal=True)
    sp.add_argument("--emax", type=int, required=True)
    sp.set_defaults(fn=_cmd_hk)

    sp = sub.add_parser("ehk", help="two-point Hilbert-Kunz multiplicity estimate")
    _add_common(sp, ideal=True)
    sp.add_argument("--emax", type=int, required=True)
    sp.set_defaults(fn=_cmd_ehk)

    sp = sub.add_parser("check", help="run a named claim check")
    sp.add_argument("which", choices=("kunz", "flatness", "lemma21", "thm23", "thm33", "rescaling"))
    _add_common(sp)
    sp.add_argument("--ideal", default=None)
    sp.add_argument("--ideal-j", dest="ideal_j", default=None)
    sp.add_argument("--prime", default=None)
    sp.add_argument("--primes", default=None, help="comma-separated prime names (thm23)")
    sp.add_argument("--param", default=None)
    sp.add_argument("--q", default=None, help="comma-separated powers of p")
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--emax", type=int, default=3)
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("corpus", help="list or run the fixture corpus")
    sp.add_argument("action", choices=("list", "run"))
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--id", default=None)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--spair-cap", type=int, default=None)
    sp.add_argument("--n-cap", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=_cmd_corpus)

    return ap


def main(argv=None) -> int:
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else 0
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if getattr(args, "spair_cap", None):
        groebner.SPAIR_CAP = args.spair_cap
    if getattr(args, "n_cap", None):
        lengths.LOCAL_N_CAP = args.n_cap
    try:
        return args.fn(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except CertificationError as exc:
        print("certification failure: %s" % exc, file=sys.stderr)
        return EXIT_CERTIFICATION


if __name__ == "__main__":
    raise SystemExit(main())
