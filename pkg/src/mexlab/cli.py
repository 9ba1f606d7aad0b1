"""Command-line front end: parsing, dispatch, JSON/CSV emission.

Exit codes: 0 success, 2 validation or precondition failure (a machine
readable error object is printed), 64 unknown subcommand, 74 file I/O
failure.  Every randomized run records its seed in its report.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from .bounds import ConditionError
from .constructions import (CSV_HEADER, ExperimentSpec, deletion_method,
                            norm_graph, run_experiment)
from .extraction import ExtractionParams, extract_dense
from .graphs import (Graph, Pattern, count_cliques, count_copies,
                     edge_clique_participation, format_edge_list, is_free,
                     load_edge_list, parse_pattern_literal, pattern,
                     save_edge_list)
from .oracle import OracleQuery, ex_exact, mex_exact

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_IO = 74


class _CliError(Exception):
    def __init__(self, code: str, message: str, failed_condition: str | None = None):
        super().__init__(message)
        self.code = code
        self.failed_condition = failed_condition


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError("usage", message)


def _load_graph(spec: str) -> Graph:
    lit = parse_pattern_literal(spec)
    if lit is not None:
        return lit
    try:
        return load_edge_list(spec)
    except OSError:
        raise
    except ValueError as exc:
        raise _CliError("invalid-input", f"{spec}: {exc}")


def _load_pattern(spec: str) -> Pattern:
    g = _load_graph(spec)
    return Pattern(g, spec)


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_params(text: str) -> dict:
    """k=v pairs, comma separated; '+'-joined integers make a list, 'a/b'
    makes an exact rational."""
    out: dict = {}
    if not text:
        return out
    for chunk in text.split(","):
        if "=" not in chunk:
            raise _CliError("invalid-params", f"expected k=v, got {chunk!r}")
        key, val = chunk.split("=", 1)
        out[key.strip()] = _parse_value(val.strip())
    return out


def _parse_value(val: str):
    if "+" in val:
        return [int(x) for x in val.split("+")]
    if "/" in val:
        num, den = val.split("/", 1)
        return Fraction(int(num), int(den))
    try:
        return int(val)
    except ValueError:
        pass
    try:
        return float(val)
    except ValueError:
        return val


def _scalar_report(formula_id: str, params: dict, value) -> dict:
    rational = str(value) if isinstance(value, Fraction) else None
    return {
        "formulaId": formula_id,
        "params": {k: (str(v) if isinstance(v, Fraction) else v)
                   for k, v in params.items()},
        "value": bool(value) if isinstance(value, bool) else (
            value if value is None else float(value)),
        "valueRational": rational,
        "conditions": [],
        "tight": False,
        "aux": {},
    }


def _run_bounds(args) -> dict:
    params = _parse_params(args.params or "")
    fid = args.formula
    if fid not in bounds_mod.FORMULAS:
        raise _CliError("invalid-params", f"unknown formula id {fid!r}")
    try:
        if fid == "lemma21_constant":
            value = bounds_mod.lemma_constant(int(params["u"]), int(params["r"]))
            return _scalar_report(fid, params, value)
        if fid == "cor12":
            value = bounds_mod.cor12_exponent(int(params["r"]), params["s"])
            return _scalar_report(fid, params, value)
        if fid == "thm13_f":
            value = bounds_mod.thm13_f(params["alpha"], params["beta"])
            return _scalar_report(fid, params, value)
        if fid == "cor14_kst":
            return bounds_mod.cor14_kst(int(params["r"]), int(params["s"])).to_json()
        if fid == "thm15_general":
            f = _load_pattern(str(params["f"]))
            return bounds_mod.thm15_general(int(params["u"]), int(params["r"]), f).to_json()
        if fid == "thm41_kst_lower":
            return bounds_mod.thm41_kst_lower(int(params["u"]), int(params["r"]),
                                              int(params["s"]), int(params["t"])).to_json()
        if fid == "thm43_multipartite":
            sizes = params["s"]
            if isinstance(sizes, int):
                sizes = [sizes]
            return bounds_mod.thm43_multipartite(int(params["r"]), sizes).to_json()
        if fid == "remark42_one_part":
            sizes = params["s"]
            if isinstance(sizes, int):
                sizes = [sizes]
            return bounds_mod.remark42_one_part(int(params["r"]), sizes).to_json()
        if fid == "cor44_tripartite_lower":
            return bounds_mod.cor44_tripartite_lower(
                int(params["s1"]), int(params["s2"]), int(params["s3"])).to_json()
        if fid == "thm46_join_cycle":
            return bounds_mod.thm46_join_cycle(int(params["r"]), int(params["s"]),
                                               int(params["l"])).to_json()
        if fid == "cor17_classifier":
            f = _load_pattern(str(params["f"]))
            value = bounds_mod.cor17_classifier(f, int(params["t"]))
            return _scalar_report(fid, params, value)
    except KeyError as exc:
        raise _CliError("invalid-params", f"missing parameter {exc.args[0]!r} for {fid}")
    raise AssertionError


def _build_parser() -> _Parser:
    top = _Parser(prog="mexlab", description=__doc__)
    top.add_argument("--threads", type=int,
                     default=int(os.environ.get("MEXLAB_THREADS", "1")),
                     help="worker-count cap; never changes any output")
    sub = top.add_subparsers(dest="command")

    p = sub.add_parser("count", help="exact clique counts")
    p.add_argument("--input", required=True)
    p.add_argument("--max-clique", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("participation", help="per-edge r-clique participation")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("pattern-count", help="copies of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out")

    p = sub.add_parser("free-check", help="does the input avoid the pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out")

    p = sub.add_parser("extract", help="threshold edge filtering")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--C", type=float, required=True, dest="C")
    p.add_argument("--report")
    p.add_argument("--out", help="write the filtered subgraph edge list here")

    p = sub.add_parser("bounds", help="closed-form exponent reports")
    p.add_argument("--formula", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--out")

    p = sub.add_parser("construct", help="lower-bound witness generators")
    csub = p.add_subparsers(dest="construct_kind")
    pn = csub.add_parser("norm-graph")
    pn.add_argument("--q", type=int, required=True)
    pn.add_argument("--s", type=int, required=True)
    pn.add_argument("--out", required=True)
    pd = csub.add_parser("deletion")
    pd.add_argument("--pattern", required=True)
    pd.add_argument("--u", type=int, required=True)
    pd.add_argument("--r", type=int, required=True)
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--seed", type=int, required=True)
    pd.add_argument("--c", type=float, default=1.0)
    pd.add_argument("--out")
    pd.add_argument("--report")

    p = sub.add_parser("oracle", help="exhaustive small-case maxima")
    osub = p.add_subparsers(dest="oracle_mode")
    pm = osub.add_parser("mex")
    pm.add_argument("--m", type=int, required=True)
    pm.add_argument("--target", required=True)
    pm.add_argument("--forbidden", required=True)
    pm.add_argument("--report")
    pe = osub.add_parser("ex")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--target", required=True)
    pe.add_argument("--forbidden", required=True)
    pe.add_argument("--report")

    p = sub.add_parser("experiment", help="scaling experiment to CSV")
    p.add_argument("spec")
    p.add_argument("--csv", required=True)
    return top


KNOWN_COMMANDS = {"count", "participation", "pattern-count", "free-check",
                  "extract", "bounds", "construct", "oracle", "experiment"}


def _dispatch(args) -> dict | None:
    cmd = args.command
    if cmd == "count":
        g = _load_graph(args.input)
        return count_cliques(g, args.max_clique).to_json()
    if cmd == "participation":
        g = _load_graph(args.input)
        part = edge_clique_participation(g, args.r)
        return {"r": args.r,
                "participation": [[u, v, part[(u, v)]] for u, v in sorted(part)]}
    if cmd == "pattern-count":
        f = _load_pattern(args.pattern)
        g = _load_graph(args.input)
        return {"pattern": args.pattern, "count": count_copies(f, g)}
    if cmd == "free-check":
        f = _load_pattern(args.pattern)
        g = _load_graph(args.input)
        return {"pattern": args.pattern, "free": is_free(f, g)}
    if cmd == "extract":
        g = _load_graph(args.input)
        params = ExtractionParams(args.r, args.alpha, args.C)
        out_graph, report = extract_dense(g, params)
        if args.out:
            save_edge_list(out_graph, args.out)
        _emit(report.to_json(), args.report)
        return None
    if cmd == "bounds":
        return _run_bounds(args)
    if cmd == "construct":
        if args.construct_kind == "norm-graph":
            g = norm_graph(args.q, args.s)
            save_edge_list(g, args.out)
            _emit({"family": "norm_graph", "q": args.q, "s": args.s,
                   "n": g.n, "m": g.m, "out": args.out}, None)
            return None
        if args.construct_kind == "deletion":
            f = _load_pattern(args.pattern)
            g, run = deletion_method(f, args.u, args.r, args.n, args.seed, args.c)
            if args.out:
                save_edge_list(g, args.out)
            _emit(run.to_json(), args.report)
            return None
        raise _CliError("usage", "construct needs a subcommand: norm-graph | deletion")
    if cmd == "oracle":
        if args.oracle_mode == "mex":
            res = mex_exact(OracleQuery("mex", args.m, _load_pattern(args.target),
                                        _load_pattern(args.forbidden)))
        elif args.oracle_mode == "ex":
            res = ex_exact(args.n, _load_pattern(args.target),
                           _load_pattern(args.forbidden))
        else:
            raise _CliError("usage", "oracle needs a subcommand: mex | ex")
        _emit(res.to_json(), args.report)
        return None
    if cmd == "experiment":
        with open(args.spec, "r", encoding="ascii") as fh:
            spec = ExperimentSpec.from_json(json.load(fh))
        result = run_experiment(spec)
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(result.csv_rows())
        return {"family": spec.family, "rows": len(result.rows),
                "predictedExponent": result.predicted_exponent,
                "fittedSlope": result.fitted_slope, "csv": args.csv}
    raise _CliError("usage", f"missing subcommand")


def _first_subcommand(argv: list[str]) -> str | None:
    skip_next = False
    for tok in argv:
        if skip_next:
            skip_next = False
            continue
        if tok == "--threads":
            skip_next = True
            continue
        if tok.startswith("-"):
            continue
        return tok
    return None


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    sub = _first_subcommand(argv)
    if sub is not None and sub not in KNOWN_COMMANDS:
        _emit({"code": "unknown-command",
               "message": f"unknown subcommand {sub!r}"}, None)
        return EXIT_USAGE
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise _CliError("invalid-params", "--threads must be >= 1")
        if args.command is None:
            raise _CliError("usage", "a subcommand is required")
        report = _dispatch(args)
        if report is not None:
            _emit(report, getattr(args, "out", None))
        return EXIT_OK
    except _CliError as exc:
        err = {"code": exc.code, "message": str(exc)}
        if exc.failed_condition:
            err["failedCondition"] = exc.failed_condition
        _emit(err, None)
        return EXIT_VALIDATION
    except ConditionError as exc:
        _emit({"code": "condition-failed", "message": str(exc),
               "failedCondition": exc.condition}, None)
        return EXIT_VALIDATION
    except ValueError as exc:
        _emit({"code": "invalid-params", "message": str(exc)}, None)
        return EXIT_VALIDATION
    except OSError as exc:
        _emit({"code": "io-error", "message": str(exc)}, None)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
