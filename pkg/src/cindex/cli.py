"""Command line front end: validate, compute, explain, demo.

Exit codes: 0 success, 1 internal error, 2 validation failure, 3 I/O failure,
4 author/publication not found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import replace
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from cindex.corpus import (
    BINARY,
    Corpus,
    SchemaConfig,
    author_publications,
    build_corpus,
    parse_records,
)
from cindex.demo import write_demo
from cindex.errors import NotFoundError, ParseError, SchemaError, ValidationError
from cindex.graph import build_graph
from cindex.metrics import AuthorScore, community_index, compute_all, make_context

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_NOT_FOUND = 4


def _display(value: float) -> str:
    # Display-only rounding: 2 decimals, ties away from zero. Never fed back
    # into any computation.
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _plural(count: int, noun: str) -> str:
    return f"{count} {noun}" if count == 1 else f"{count} {noun}s"


def _load_corpus(args: argparse.Namespace) -> tuple[Corpus, SchemaConfig]:
    if getattr(args, "schema", None):
        schema = SchemaConfig.from_json(Path(args.schema).read_bytes())
    else:
        schema = SchemaConfig()
    if getattr(args, "delta", None) is not None:
        schema = replace(schema, delta=args.delta)
    if getattr(args, "skip_solo", False):
        schema = replace(schema, include_solo_publications=False)
    input_path = Path(args.input)
    input_format = "json" if input_path.suffix.lower() == ".json" else "csv"
    records = parse_records(input_path.read_bytes(), format=input_format)
    return build_corpus(records, schema), schema


def _write_output(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def _render_csv(corpus: Corpus, scores: list[AuthorScore]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["author_key", "display_name", "c_index", "publication_count", "h_index"])
    for score in scores:
        writer.writerow(
            [
                score.author_key,
                corpus.display_name(score.author_key),
                repr(score.c_index),
                score.publication_count,
                "n/a" if score.h_index is None else score.h_index,
            ]
        )
    return buffer.getvalue()


def _render_json(corpus: Corpus, scores: list[AuthorScore]) -> str:
    payload = []
    for score in scores:
        feature_sums: dict[str, list[float]] = {}
        for breakdown in score.per_publication:
            for name, value in breakdown.per_feature.items():
                feature_sums.setdefault(name, []).append(value)
        payload.append(
            {
                "author_key": score.author_key,
                "display_name": corpus.display_name(score.author_key),
                "c_index": score.c_index,
                "publication_count": score.publication_count,
                "h_index": score.h_index,
                "per_feature_means": {
                    name: math.fsum(values) / len(values)
                    for name, values in feature_sums.items()
                },
                "per_publication": [
                    {
                        "pub_id": breakdown.pub_id,
                        "per_feature": dict(breakdown.per_feature),
                        "paper_factor": breakdown.paper_factor,
                        "diagnostics": {
                            name: dict(detail)
                            for name, detail in breakdown.diagnostics.items()
                        },
                    }
                    for breakdown in score.per_publication
                ],
            }
        )
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_validate(args: argparse.Namespace) -> int:
    corpus, _ = _load_corpus(args)
    print(f"{_plural(corpus.n_publications, 'publication')}, {_plural(corpus.n_authors, 'author')}")
    return EXIT_OK


def _cmd_compute(args: argparse.Namespace) -> int:
    corpus, schema = _load_corpus(args)
    graph = build_graph(corpus)
    scores = compute_all(corpus, schema, graph=graph, n_jobs=args.jobs)
    if args.format == "json":
        text = _render_json(corpus, scores)
    else:
        text = _render_csv(corpus, scores)
    _write_output(args.output, text)
    if args.dump_graph:
        adjacency = {key: sorted(graph.neighbors(key)) for key in sorted(corpus.author_index)}
        Path(args.dump_graph).write_text(
            json.dumps(adjacency, indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
            newline="",
        )
    if args.output not in (None, "-"):
        print(f"wrote {_plural(len(scores), 'author score')} to {args.output}")
    return EXIT_OK


def _explain_feature_line(name: str, value: float, detail: dict) -> str:
    if detail.get("missing_reference_value"):
        return f"  {name}: reference value missing -> factor 0.00"
    if detail["kind"] == BINARY:
        return (
            f"  {name}: cost {detail['cost']:g}, coauthors {detail['n_coauthors']}, "
            f"base weight {detail['base_weight']:g} -> factor {_display(value)}"
        )
    return (
        f"  {name}: numerator {detail['numerator']:g}, denominator {detail['denominator']:g}, "
        f"breadth {detail['breadth']}, base weight {detail['base_weight']:g}, "
        f"category weight {detail['category_weight']:g} -> factor {_display(value)}"
    )


def _cmd_explain(args: argparse.Namespace) -> int:
    corpus, schema = _load_corpus(args)
    graph = build_graph(corpus)
    author = args.author
    if author not in corpus.author_index:
        raise NotFoundError(f"unknown author {author!r}")
    if args.pub is not None and args.pub not in author_publications(corpus, author):
        raise NotFoundError(f"author {author!r} is not on publication {args.pub!r}")
    score = community_index(corpus, graph, author, schema)
    breakdowns = [
        item for item in score.per_publication if args.pub is None or item.pub_id == args.pub
    ]
    print(f"author {author} ({corpus.display_name(author)}): "
          f"{_plural(score.publication_count, 'scored publication')}")
    for breakdown in breakdowns:
        ctx = make_context(corpus, graph, author, breakdown.pub_id, schema.delta)
        print(f"publication {breakdown.pub_id}: {_plural(ctx.n_coauthors, 'coauthor')}")
        for coauthor in ctx.coauthors:
            print(f"  coauthor {coauthor.author_key} "
                  f"({corpus.display_name(coauthor.author_key)}): bonus {coauthor.bonus:g}")
        for name, value in breakdown.per_feature.items():
            print(_explain_feature_line(name, value, dict(breakdown.diagnostics[name])))
        print(f"  paper factor: {_display(breakdown.paper_factor)}")
    if args.pub is None:
        print(f"community index: {_display(score.c_index)}")
        if score.h_index is not None:
            print(f"h-index: {score.h_index}")
    return EXIT_OK


def _cmd_demo(args: argparse.Namespace) -> int:
    for path in write_demo(args.output):
        print(f"wrote {path}")
    return EXIT_OK


def _add_corpus_options(sub: argparse.ArgumentParser, schema_required: bool) -> None:
    sub.add_argument("--input", required=True, help="CSV or JSON file of authorship rows")
    sub.add_argument(
        "--schema",
        required=schema_required,
        default=None,
        help="JSON feature schema" + ("" if schema_required else " (optional)"),
    )
    sub.add_argument(
        "--delta", type=float, default=None,
        help="override the schema's first-time collaborator bonus strength",
    )
    sub.add_argument(
        "--skip-solo", action="store_true",
        help="exclude single-author publications from the per-author mean",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cindex",
        description="Co-authorship diversity scoring over publication-author tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="parse and validate an input file")
    _add_corpus_options(validate, schema_required=False)
    validate.set_defaults(func=_cmd_validate)

    compute = sub.add_parser("compute", help="score every author and write a ranked report")
    _add_corpus_options(compute, schema_required=True)
    compute.add_argument("--output", default=None, help="report path ('-' or omitted: stdout)")
    compute.add_argument("--format", choices=("csv", "json"), default="csv",
                         help="report format (default csv)")
    compute.add_argument("--jobs", type=int, default=None,
                         help="parallel workers for scoring (same output as sequential)")
    compute.add_argument("--dump-graph", default=None,
                         help="also write the co-authorship adjacency as JSON")
    compute.set_defaults(func=_cmd_compute)

    explain = sub.add_parser("explain", help="show every term behind one author's scores")
    _add_corpus_options(explain, schema_required=True)
    explain.add_argument("--author", required=True, help="author key to explain")
    explain.add_argument("--pub", default=None, help="restrict to one publication id")
    explain.set_defaults(func=_cmd_explain)

    demo = sub.add_parser("demo", help="write the bundled demo corpora and schemas")
    demo.add_argument("--output", required=True, help="target directory")
    demo.set_defaults(func=_cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParseError, SchemaError, ValidationError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NotFoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except Exception as exc:  # CLI boundary: anything else is an internal error
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
