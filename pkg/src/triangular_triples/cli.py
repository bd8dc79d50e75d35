"""Command-line front end.

Exit codes: 0 success, 1 verified-false, 2 usage error, 3 internal invariant
violation. Every JSON emission is an envelope with ``schema_version``,
``command``, ``params``, ``results`` and ``diagnostics``; big integers are
always decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Optional, Sequence

from .bigmath import triangular
from .construction import (
    ConstructionParams,
    InvariantViolation,
    TripleRecord,
    closed_form_N,
    closed_form_s,
    closed_form_t,
    identity_check_s,
    identity_check_t,
    iter_triples,
    recurrence_table,
)
from .quadring import InexactError
from .search import find_triples
from .verify import VerifyReport, verify_raw_tuple, verify_tuple

SCHEMA_VERSION = "1"

GENERATE_CSV_COLUMNS = ["k", "a", "b", "c", "root_ab", "root_ac", "root_bc"]
SEARCH_CSV_COLUMNS = ["a", "b", "c", "root_ab", "root_ac", "root_bc", "classification"]

_DEC = {"type": "string", "pattern": "^-?[0-9]+$"}
_TRIPLE = {
    "type": "object",
    "required": ["indices", "elements", "n_param", "certificates"],
    "properties": {
        "indices": {"type": "array", "items": _DEC, "minItems": 3, "maxItems": 3},
        "elements": {"type": "array", "items": _DEC, "minItems": 3, "maxItems": 3},
        "n_param": _DEC,
        "certificates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pair", "value", "root"],
                "properties": {
                    "pair": {"type": "array", "items": _DEC},
                    "value": _DEC,
                    "root": _DEC,
                },
            },
        },
    },
}

# JSON Schema of every emitted object; per-command payloads under "results".
OUTPUT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "params", "results", "diagnostics"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["generate", "verify", "closed-form", "search"]},
        "params": {"type": "object"},
        "results": {"type": "object"},
        "diagnostics": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"command": {"const": "generate"}}},
            "then": {"properties": {"results": {
                "type": "object",
                "required": ["k", "triple"],
                "properties": {"k": {"type": "integer", "minimum": 0}, "triple": _TRIPLE},
            }}},
        },
        {
            "if": {"properties": {"command": {"const": "search"}}},
            "then": {"properties": {"results": {
                "type": "object",
                "required": ["triples"],
                "properties": {"triples": {"type": "array", "items": _TRIPLE}},
            }}},
        },
        {
            "if": {"properties": {"command": {"const": "verify"}}},
            "then": {"properties": {"results": {
                "type": "object",
                "required": ["verdict", "pairs"],
                "properties": {"verdict": {"type": "boolean"}, "pairs": {"type": "array"}},
            }}},
        },
        {
            "if": {"properties": {"command": {"const": "closed-form"}}},
            "then": {"properties": {"results": {
                "type": "object",
                "required": ["s", "N", "t", "identity_s", "identity_t", "all_agree"],
            }}},
        },
    ],
}


def envelope(command: str, params: dict, results: dict, diagnostics: Optional[dict] = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "results": results,
        "diagnostics": diagnostics or {},
    }


def triple_to_json(rec: TripleRecord, with_classification: bool = False) -> dict:
    a, b, c = rec.indices
    out = {
        "indices": [str(i) for i in rec.indices],
        "elements": [str(triangular(i)) for i in rec.indices],
        "n_param": str(rec.n_param),
        "certificates": [
            {"pair": [str(x), str(y)], "value": str(cert.value), "root": str(cert.root)}
            for (x, y), cert in zip(((a, b), (a, c), (b, c)), rec.certificates)
        ],
    }
    if with_classification:
        p = rec.provenance
        cls: dict[str, Any] = {"kind": p.kind}
        if p.kind == "constructed":
            cls.update(n=str(p.n), m=str(p.m), k=p.k)
        out["classification"] = cls
    else:
        out["provenance"] = str(rec.provenance)
    return out


def report_to_json(report: VerifyReport) -> dict:
    pairs = [
        {
            "pair": [str(p.i), str(p.j)],
            "value": str(p.value),
            "square": p.ok,
            "root": str(p.certificate.root) if p.certificate else None,
        }
        for p in report.pair_results
    ]
    return {
        "verdict": report.verdict,
        "raw": report.raw,
        "indices": [str(i) for i in report.indices],
        "pairs": pairs,
        "failures": [q for q in pairs if not q["square"]],
    }


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triangular-triples",
        description="Construct, verify and search D(m^2)-triples of triangular numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit constructed triples for k = 0 .. steps-1")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--steps", type=int, required=True)
    g.add_argument("--format", choices=["json", "csv"], default="json")
    g.add_argument("--no-self-check", action="store_true",
                   help="skip per-step certificate re-verification")

    v = sub.add_parser("verify", help="check the D(n) property of a tuple")
    v.add_argument("--n", type=int, required=True, dest="n_param")
    v.add_argument("--indices", type=_int_list, required=True,
                   help="comma-separated triangular indices (raw elements with --raw)")
    v.add_argument("--raw", action="store_true", help="treat the values as the elements themselves")

    c = sub.add_parser("closed-form", help="compare closed forms with the recurrences")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k-max", type=int, required=True)

    s = sub.add_parser("search", help="exhaustive search up to an index bound")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--classify", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    return parser


def cmd_generate(args, parser, out) -> int:
    if args.m < 1 or args.n < 1:
        parser.error("--m and --n must be >= 1")
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    params = ConstructionParams(args.m, args.n)
    check = not args.no_self_check
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(GENERATE_CSV_COLUMNS)
    header = {"m": str(args.m), "n": str(args.n), "steps": args.steps, "self_check": check}
    for k, rec in enumerate(iter_triples(params, check=check)):
        if k >= args.steps:
            break
        if writer is not None:
            writer.writerow([k, *rec.indices, *(cert.root for cert in rec.certificates)])
        else:
            _emit(envelope("generate", header, {"k": k, "triple": triple_to_json(rec)}), out)
        out.flush()
    return 0


def cmd_verify(args, parser, out) -> int:
    items = args.indices
    if args.n_param == 0:
        parser.error("--n must be nonzero")
    if len(items) < 2:
        parser.error("need at least two values")
    items = sorted(items)
    if len(set(items)) != len(items) or items[0] < 1:
        parser.error("values must be distinct positive integers")
    check = verify_raw_tuple if args.raw else verify_tuple
    report = check(items, args.n_param)
    params = {"n": str(args.n_param), "indices": [str(i) for i in items], "raw": args.raw}
    _emit(envelope("verify", params, report_to_json(report)), out)
    for f in report.failures:
        print(f"pair ({f.i}, {f.j}): {f.value} is not a perfect square", file=sys.stderr)
    return 0 if report.verdict else 1


def _compare(ks: range, recurrence: dict[int, int], closed) -> list[dict]:
    rows = []
    for k in ks:
        cf = closed(k)
        rows.append({"k": k, "recurrence": str(recurrence[k]), "closed_form": str(cf),
                     "agrees": cf == recurrence[k]})
    return rows


def cmd_closed_form(args, parser, out) -> int:
    if args.m < 1 or args.n < 1:
        parser.error("--m and --n must be >= 1")
    if args.k_max < 1:
        parser.error("--k-max must be >= 1")
    params = ConstructionParams(args.m, args.n)
    k_max = args.k_max
    table = recurrence_table(params, k_max)
    results: dict[str, Any] = {
        "s": _compare(range(-1, k_max + 1), table.s, lambda k: closed_form_s(params, k)),
        # the N closed form describes N_k only from k = 1; k = 0 is reported separately
        "N": _compare(range(1, k_max + 3), table.N, lambda k: closed_form_N(params, k)),
        "t": _compare(range(1, k_max + 1), table.t, lambda k: closed_form_t(params, k)),
        "identity_s": [{"k": k, "holds": identity_check_s(params, k, table)}
                       for k in range(1, k_max + 1)],
        "identity_t": [{"k": k, "holds": identity_check_t(params, k, table)}
                       for k in range(1, k_max + 1)],
    }
    ok = all(r["agrees"] for key in ("s", "N", "t") for r in results[key]) and all(
        r["holds"] for key in ("identity_s", "identity_t") for r in results[key]
    )
    results["all_agree"] = ok
    n0_cf = closed_form_N(params, 0)
    diagnostics = {
        "N_k0": {"recurrence": str(params.n), "closed_form": str(n0_cf),
                 "agrees": n0_cf == params.n},
    }
    header = {"m": str(args.m), "n": str(args.n), "k_max": k_max}
    _emit(envelope("closed-form", header, results, diagnostics), out)
    if not ok:
        print("closed form / recurrence disagreement", file=sys.stderr)
        return 3
    return 0


def cmd_search(args, parser, out) -> int:
    if args.m < 1:
        parser.error("--m must be >= 1")
    if args.bound < 3:
        parser.error("--bound must be >= 3")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    report = find_triples(args.m, args.bound, jobs=args.jobs)
    print(f"search m={args.m} bound={args.bound} jobs={args.jobs}: "
          f"{report.triangles_found} triples in {report.wall_time:.3f}s", file=sys.stderr)
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SEARCH_CSV_COLUMNS)
        for rec in report.triples:
            tag = str(rec.provenance) if args.classify else ""
            writer.writerow([*rec.indices, *(c.root for c in rec.certificates), tag])
        return 0
    # jobs and wall time stay off stdout so output is identical for any jobs
    header = {"m": str(args.m), "bound": str(args.bound), "classify": args.classify}
    results = {"triples": [triple_to_json(t, with_classification=args.classify)
                           for t in report.triples]}
    diagnostics = {
        "pairs_tested": report.pairs_tested,
        "pairs_found": report.pairs_found,
        "triangles_found": report.triangles_found,
    }
    if args.classify:
        kinds = [t.provenance.kind for t in report.triples]
        diagnostics["constructed"] = kinds.count("constructed")
        diagnostics["sporadic"] = kinds.count("sporadic")
    _emit(envelope("search", header, results, diagnostics), out)
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "closed-form": cmd_closed_form,
    "search": cmd_search,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, parser, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (InvariantViolation, InexactError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
