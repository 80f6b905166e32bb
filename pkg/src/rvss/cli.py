"""Command-line front door: score, parse, compare, catalog, serve.

Exit codes: 0 success, 1 domain error (parse/validation), 2 usage error,
3 I/O error. Domain errors print a single structured line to stderr with
the machine code and the offending token.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, codec, comparator, engine
from .catalog import Scheme
from .errors import EmptyCorpus, UnreadableSource, VectorError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_IO = 3

_SCHEME_SLUGS = {"cvss3": Scheme.CVSS_3_0, "rvss1": Scheme.RVSS_1_0}


def _print_domain_error(exc: VectorError) -> None:
    print(f"error: {exc.code}: {exc}", file=sys.stderr)


def cmd_score(args) -> int:
    try:
        report = engine.score(codec.parse(args.vector))
    except VectorError as exc:
        _print_domain_error(exc)
        return EXIT_DOMAIN

    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
        return EXIT_OK

    print(report.canonical_vector)
    for name, value, severity in zip(
        ("base", "temporal", "environmental"),
        report.scores.as_tuple(),
        report.severities,
    ):
        print(f"  {name:<14} {value:>4.1f}  {severity}")
    if args.subscores:
        s = report.subscores
        print("subscores")
        print(f"  exploitability   {s.exploitability:.6f}")
        print(f"  isc base         {s.isc_base:.6f}")
        print(f"  impact           {s.impact:.6f}")
        print(f"  m.exploitability {s.m_exploitability:.6f}")
        print(f"  isc modified     {s.isc_modified:.6f}")
        print(f"  m.impact         {s.m_impact:.6f}")
    return EXIT_OK


def cmd_parse(args) -> int:
    try:
        vector = codec.parse(args.vector)
    except VectorError as exc:
        _print_domain_error(exc)
        return EXIT_DOMAIN

    if args.canonical:
        print(codec.serialize(vector))
        return EXIT_OK

    scope_changed = vector.get("S") == "C"
    print(f"scheme: {vector.scheme.prefix}")
    for key, value in vector.assignments:
        metric = catalog.get_metric(vector.scheme, key)
        if isinstance(value, codec.CompositeAV):
            factors = " x ".join(
                f"{t} {catalog.lookup_weight(vector.scheme, key, t)}"
                for t in value.tokens
            )
            detail = f"{value.weight:.6g}  ({factors})" if len(value.tokens) > 1 \
                else f"{value.weight:.6g}"
            print(f"  {key:<4} {value.text:<6} {metric.name}: weight {detail}")
        else:
            weight = catalog.lookup_weight(vector.scheme, key, value, scope_changed)
            print(f"  {key:<4} {value:<6} {metric.name}: weight {weight}")
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.builtin:
        records, diagnostics = comparator.builtin_corpus(), []
    else:
        corpus_format = "csv" if str(args.input).endswith(".csv") else "jsonl"
        try:
            records, diagnostics = comparator.load_records(args.input, corpus_format)
        except UnreadableSource as exc:
            print(f"error: UnreadableSource: {exc}", file=sys.stderr)
            return EXIT_IO
        except EmptyCorpus as exc:
            print(f"error: EmptyCorpus: {exc}", file=sys.stderr)
            return EXIT_DOMAIN

    rows = comparator.compare(records)
    for diag in diagnostics:
        print(f"diagnostic: line {diag.line}: {diag.code}: {diag.message}",
              file=sys.stderr)
    for row in rows:
        for message in row.diagnostics:
            print(f"diagnostic: record {row.id}: {message}", file=sys.stderr)

    payload = comparator.emit_report(rows, args.format)
    if args.out:
        try:
            with open(args.out, "wb") as handle:
                handle.write(payload)
        except OSError as exc:
            print(f"error: UnreadableSource: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return EXIT_OK


def cmd_catalog(args) -> int:
    scheme = _SCHEME_SLUGS[args.scheme]
    if args.json:
        print(json.dumps(catalog.catalog_export(scheme), indent=2))
        return EXIT_OK

    print(scheme.prefix)
    for metric in catalog.list_metrics(scheme):
        subgroup = f"/{metric.subgroup}" if metric.subgroup else ""
        flag = "mandatory" if metric.mandatory else "optional"
        print(f"{metric.name} ({metric.key})  [{metric.group}{subgroup}, {flag}]")
        for value in metric.values:
            scope_note = (
                f"  ({value.weight_scope_changed} if scope changed)"
                if value.weight_scope_changed is not None else ""
            )
            alias_note = f"  aliases: {', '.join(value.aliases)}" if value.aliases else ""
            print(f"  {value.code:<3} {value.label:<20} {value.weight}"
                  f"{scope_note}{alias_note}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, resolve_addr

    host, port = resolve_addr(args.addr)
    uvicorn.run(create_app(), host=host, port=port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rvss",
        description="Score and compare vulnerability vectors under "
                    "CVSS v3.0 and RVSS v1.0.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score a vector string")
    p.add_argument("vector", help="vector string, e.g. CVSS:3.0/AV:N/...")
    p.add_argument("--json", action="store_true", help="emit the score report object")
    p.add_argument("--subscores", action="store_true",
                   help="include sub-scores in the human-readable output")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("parse", help="parse a vector and show its assignments")
    p.add_argument("vector")
    p.add_argument("--canonical", action="store_true",
                   help="print only the canonical vector string")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("compare", help="batch-score a corpus under both schemes")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("input", nargs="?", help="corpus path (.jsonl or .csv)")
    group.add_argument("--builtin", action="store_true",
                       help="use the built-in four-case corpus")
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("catalog", help="list a scheme's metrics and weights")
    p.add_argument("scheme", choices=sorted(_SCHEME_SLUGS))
    p.add_argument("--json", action="store_true",
                   help="emit the machine-readable catalog document")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("serve", help="run the HTTP scoring service")
    p.add_argument("--addr", default=None,
                   help="bind address host:port (default SERVE_ADDR or 127.0.0.1:8315)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
