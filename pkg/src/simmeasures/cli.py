"""Command-line front end.

Usage:
  simmeasures eval euclidean --a 5,3,4 --b 2,5,7
  simmeasures eval kl --a-hist 2,3,4,5 --b-hist 1,2,5,6 --normalize
  simmeasures matrix euclidean rows.csv --parallel
  simmeasures audit dice --domain vector:nonneg --trials 10000 --seed 7
  simmeasures list --family entropy

Exit codes: 0 ok, 1 audit verdicts disagree with the claim, 2 usage or parse
error (including unknown measures), 3 a measure precondition failed.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys

from . import registry
from .core import NoConversion, SimDistPair, normalize
from .metric_audit import audit as run_audit
from .errors import IncompatibleDomain, MeasureError, UnknownMeasure
from .pairwise import format_cell, pairwise, to_csv

SEED_ENV = "SIMMEASURES_SEED"
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class ParseError(ValueError):
    pass


# parsing helpers

def parse_vector(text: str) -> list[float]:
    parts = [t.strip() for t in text.split(",")]
    try:
        return [float(t) for t in parts]
    except ValueError:
        raise ParseError(f"not a comma-separated list of numbers: {text!r}") from None


def parse_ranges(text: str) -> list[tuple[float, float]]:
    out = []
    for tok in text.split(","):
        lo, sep, hi = tok.partition(":")
        if not sep:
            raise ParseError(f"range {tok!r} is not low:high")
        try:
            out.append((float(lo), float(hi)))
        except ValueError:
            raise ParseError(f"range {tok!r} is not numeric") from None
    return out


def parse_weights(text: str) -> dict:
    out = {}
    for tok in text.split(","):
        sym, sep, w = tok.partition("=")
        if not sep or not sym:
            raise ParseError(f"weight {tok!r} is not symbol=value")
        try:
            out[sym] = float(w)
        except ValueError:
            raise ParseError(f"weight {tok!r} is not numeric") from None
    return out


def parse_option(text: str) -> tuple[str, object]:
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise ParseError(f"option {text!r} is not key=value")
    key = key.replace("-", "_")
    low = raw.lower()
    if low in ("true", "false"):
        return key, low == "true"
    for conv in (int, float):
        try:
            return key, conv(raw)
        except ValueError:
            pass
    return key, raw


def read_csv_rows(path: str) -> list[list[float]]:
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    out = []
    for k, row in enumerate(rows):
        try:
            out.append([float(c) for c in row])
        except ValueError:
            raise ParseError(f"{path} line {k + 1} is not numeric") from None
    return out


def read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return [line.rstrip("\r\n") for line in fh]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# evaluation

def digest(inputs: dict, options: dict) -> str:
    blob = json.dumps({"inputs": inputs, "options": options}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def make_record(measure_id: str, inputs: dict, options: dict, result, source=None) -> dict:
    rec = {
        "measure": measure_id,
        "inputs": inputs,
        "options": options,
        "inputs_digest": digest(inputs, options),
    }
    if source:
        rec["source"] = source
    if isinstance(result, SimDistPair):
        rec["similarity"] = float(result.similarity)
        rec["distance"] = float(result.distance)
    elif isinstance(result, NoConversion):
        rec["distance"] = None
        rec["no_conversion"] = True
    else:
        rec["value"] = float(result)
    return rec


def _runtime_options(options: dict) -> dict:
    opts = dict(options)
    if "ranges" in opts:
        opts["ranges"] = [tuple(r) for r in opts["ranges"]]
    return opts


def evaluate_record(rec: dict):
    """Re-run a record produced by ``eval --json``."""
    inputs = rec["inputs"]
    return registry.evaluate(rec["measure"], inputs["a"], inputs.get("b"),
                             **_runtime_options(rec["options"]))


def _collect_options(args, desc) -> dict:
    opts = {}
    for text in args.opt or ():
        k, v = parse_option(text)
        opts[k] = v
    if args.ranges:
        opts["ranges"] = [list(r) for r in parse_ranges(args.ranges)]
    if args.weights:
        opts["weights"] = parse_weights(args.weights)
    if args.dataset:
        opts["dataset"] = read_csv_rows(args.dataset)
    if desc.id == "gower" and "ranges" not in opts:
        raise ParseError("gower needs --ranges low:high,...")
    if desc.id == "mahalanobis" and "dataset" not in opts:
        raise ParseError("mahalanobis needs --dataset FILE")
    if desc.id == "hcs" and "weights" not in opts:
        raise ParseError("hcs needs --weights symbol=value,...")
    return opts


def _eval_inputs(args, desc) -> tuple[dict, dict]:
    source = {}
    if desc.input_kind == "string":
        if args.file:
            lines = read_lines(args.file)
            if len(lines) < 2:
                raise ParseError(f"{args.file} needs two lines")
            a, b = lines[0], lines[1]
            source["file"] = args.file
        else:
            if args.a is None or args.b is None:
                raise ParseError("give --a and --b (or --file)")
            a, b = args.a, args.b
        return {"a": a, "b": b}, source
    vals = {}
    for side in ("a", "b"):
        plain = getattr(args, side)
        pdf = getattr(args, f"{side}_pdf")
        hist = getattr(args, f"{side}_hist")
        given = [x for x in (plain, pdf, hist) if x is not None]
        if len(given) > 1:
            raise ParseError(f"give only one of --{side}, --{side}-pdf, --{side}-hist")
        if not given:
            if side == "b" and desc.id == "mahalanobis":
                continue
            raise ParseError(f"missing input --{side}")
        if hist is not None:
            if not args.normalize:
                raise ParseError(f"--{side}-hist needs --normalize")
            source[f"{side}_hist"] = hist
            vals[side] = [float(v) for v in normalize(parse_vector(hist))]
        else:
            text = pdf if pdf is not None else plain
            source[side] = text
            vals[side] = parse_vector(text)
    return vals, source


def _fmt(v: float, precision) -> str:
    return format_cell(float(v), precision)


def cmd_eval(args) -> int:
    desc = registry.get(args.measure)
    opts = _collect_options(args, desc)
    inputs, source = _eval_inputs(args, desc)
    result = registry.evaluate(desc.id, inputs["a"], inputs.get("b"), **_runtime_options(opts))
    if args.json:
        print(json.dumps(make_record(desc.id, inputs, opts, result, source), sort_keys=True))
        return EXIT_OK
    if isinstance(result, SimDistPair):
        print(f"similarity {_fmt(result.similarity, args.precision)}")
        print(f"distance {_fmt(result.distance, args.precision)}")
    elif isinstance(result, NoConversion):
        print("distance inf (no conversion)")
    else:
        print(_fmt(result, args.precision))
    return EXIT_OK


def cmd_matrix(args) -> int:
    desc = registry.get(args.measure)
    opts = _collect_options(args, desc)
    if desc.input_kind == "string":
        rows = read_lines(args.input)
    else:
        rows = read_csv_rows(args.input)
        if args.normalize:
            rows = [[float(v) for v in normalize(r)] for r in rows]
    matrix = pairwise(desc.id, rows, _runtime_options(opts),
                      parallel=args.parallel, workers=args.workers)
    text = to_csv(matrix, args.precision)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_audit(args) -> int:
    desc = registry.get(args.measure)
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV, "0")
        try:
            seed = int(env)
        except ValueError:
            raise ParseError(f"{SEED_ENV}={env!r} is not an integer") from None
    report = run_audit(desc.id, args.domain, trials=args.trials, seed=seed, tol=args.tol)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.matches(args.expect) else EXIT_MISMATCH


def cmd_list(args) -> int:
    descs = registry.registry_list(args.family)
    if args.json:
        for d in descs:
            print(json.dumps(d.summary(), sort_keys=True))
        return EXIT_OK
    buf = io.StringIO()
    header = ("id", "family", "input", "claim", "range")
    rows = [header] + [(d.id, d.family, d.input_kind, d.claimed_metric, d.value_range)
                       for d in descs]
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    for r in rows:
        buf.write("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[4] + "\n")
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


# argument parsing

def _precision(text: str):
    if text == "full":
        return None
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("precision is an integer or 'full'") from None
    if p < 1:
        raise argparse.ArgumentTypeError("precision must be >= 1")
    return p


def _measure_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--opt", action="append", metavar="KEY=VALUE",
                   help="measure option, e.g. exp=3, k=2, n=2, mode=standard")
    p.add_argument("--ranges", help="Gower ranges as low:high,low:high,...")
    p.add_argument("--weights", help="symbol weights as a=1,b=2,...")
    p.add_argument("--dataset", help="headerless CSV sample for mahalanobis")
    p.add_argument("--normalize", action="store_true", help="treat inputs as histograms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simmeasures",
                                     description="similarity and distance measures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one measure on two inputs")
    p.add_argument("measure")
    for side in ("a", "b"):
        p.add_argument(f"--{side}", help="vector as comma-separated numbers, or a raw string")
        p.add_argument(f"--{side}-pdf", help="pre-normalized PDF")
        p.add_argument(f"--{side}-hist", help="histogram counts (with --normalize)")
    p.add_argument("--file", help="strings file; the first two lines are compared")
    _measure_options(p)
    p.add_argument("--precision", type=_precision, default=6,
                   help="significant digits, or 'full' (default 6)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("matrix", help="pairwise matrix over the rows of a file")
    p.add_argument("measure")
    p.add_argument("input", help="CSV rows, or one string per line for string measures")
    _measure_options(p)
    p.add_argument("--output", help="write the CSV here instead of stdout")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--workers", type=int)
    p.add_argument("--precision", type=_precision, default=None,
                   help="significant digits, or 'full' (default full)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("audit", help="randomized metric-axiom audit")
    p.add_argument("measure")
    p.add_argument("--domain", help="e.g. vector:nonneg,dim=4 or string:alphabet=ab")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, help=f"default from ${SEED_ENV}, else 0")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--expect", choices=registry.CLAIMS,
                   help="claim to check against instead of the registry's")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("list", help="list registered measures")
    p.add_argument("--family", choices=registry.FAMILIES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownMeasure, IncompatibleDomain) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MeasureError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (TypeError, ValueError) as exc:
        # a measure option is missing, misspelled or has a bad value
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
