"""Command-line interface.

Subcommands mirror the pipeline stages one-to-one: `extract` (file
graph), `map` (coverage / rule suggestions), `analyze` (full per-engine
run), `aggregate` (corpus statistics), `cohesion` (folder report),
`export` (DOT), `serve` (HTTP API + viewer). The `SYDRA_LOG` environment
variable sets diagnostic verbosity (debug/info/warning/error).
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__, includes, mapping, model_io
from .cohesion import cohesion_report, folder_stats
from .pipeline import (
    PipelineError,
    RunConfig,
    aggregate_corpus,
    analyze_tree,
    load_corpus,
    run_pipeline,
)
from .scanning import DEFAULT_EXTENSIONS, scan_tree
from .taxonomy import UNK


def configure_logging() -> None:
    level = os.environ.get("SYDRA_LOG", "warning").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _add_tree_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--root", required=True, help="source tree to scan")
    p.add_argument(
        "--include-path",
        action="append",
        default=[],
        metavar="DIR",
        help="tree-relative include search directory (repeatable)",
    )
    p.add_argument(
        "--exclude",
        action="append",
        default=[],
        metavar="GLOB",
        help="path glob to skip while scanning (repeatable)",
    )
    p.add_argument("--engine-name", default="", help="defaults to the root's basename")
    p.add_argument("--commit", default="", help="commit ref recorded in the model")
    p.add_argument("--workers", type=int, default=1, help="parser thread count")


def _engine_name(args: argparse.Namespace) -> str:
    return args.engine_name or os.path.basename(os.path.abspath(args.root))


def cmd_extract(args: argparse.Namespace) -> int:
    diagnostics: list[str] = []
    files = scan_tree(args.root, args.exclude, DEFAULT_EXTENSIONS, diagnostics)
    graph = includes.build_file_graph(
        args.root, files, args.include_path, args.workers, diagnostics
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    name = _engine_name(args)
    (out / f"{name}.files.dot").write_text(model_io.export_dot(graph), encoding="utf-8")
    (out / f"{name}.diagnostics.txt").write_text(
        "".join(f"{line}\n" for line in diagnostics), encoding="utf-8"
    )
    print(
        f"{name}: files={len(graph.nodes)} edges={len(graph.edges)} "
        f"external={sum(graph.external_refs.values())}"
    )
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    diagnostics: list[str] = []
    files = scan_tree(args.root, args.exclude, DEFAULT_EXTENSIONS, diagnostics)
    if args.suggest:
        table = None
        if args.keywords:
            table = mapping.parse_keyword_table(
                Path(args.keywords).read_text(encoding="utf-8")
            )
        for rule in mapping.suggest_rules(files, table):
            print(f"{rule.subsystem} {rule.pattern}")
        return 0
    if not args.rules:
        print("error: map: either --rules or --suggest is required", file=sys.stderr)
        return 2
    rule_set = mapping.parse_rules(Path(args.rules).read_text(encoding="utf-8"))
    coverage = mapping.mapping_coverage(files, rule_set)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        name = _engine_name(args)
        (out / f"{name}.coverage.csv").write_text(
            model_io.coverage_csv(coverage), encoding="utf-8"
        )
        (out / f"{name}.unmapped.txt").write_text(
            "".join(f"{p}\n" for p in coverage.unmapped_paths), encoding="utf-8"
        )
    print(
        f"mapped {coverage.mapped}/{coverage.total} files, "
        f"{coverage.detected} subsystems detected"
    )
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    config = RunConfig(
        root=args.root,
        rules_path=args.rules,
        include_paths=tuple(args.include_path),
        excludes=tuple(args.exclude),
        engine_name=args.engine_name,
        commit_ref=args.commit,
        output_dir=args.out,
        include_unmapped=args.include_unmapped,
        workers=args.workers,
    )
    model, artifacts = run_pipeline(config)
    for path in artifacts.written:
        print(path)
    g = model.subsystem_graph
    print(
        f"{model.engine_name}: {len(model.files)} files, "
        f"{len(g.nodes)} subsystems, {len(g.edges)} subsystem edges"
    )
    return 0


def cmd_aggregate(args: argparse.Namespace) -> int:
    models = load_corpus(args.corpus)
    emergent, written = aggregate_corpus(
        models,
        args.out,
        k_inner=args.k_inner,
        threshold=args.threshold,
        max_edges=args.max_edges,
    )
    for path in written:
        print(path)
    print(
        f"inner core: {', '.join(emergent.inner_core)}; "
        f"{len(emergent.edges)} frequent edges at threshold {emergent.threshold}"
    )
    return 0


def cmd_cohesion(args: argparse.Namespace) -> int:
    files = scan_tree(args.root, args.exclude)
    if args.rules:
        rule_set = mapping.parse_rules(Path(args.rules).read_text(encoding="utf-8"))
        tags = mapping.map_files(files, rule_set)
    else:
        tags = {f.id: UNK for f in files}
    report = cohesion_report(files, tags, tuple(args.dispersion_exclude))
    summary = model_io.cohesion_summary(report)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        name = _engine_name(args)
        (out / f"{name}.cohesion.csv").write_text(
            model_io.folder_csv(folder_stats(files)), encoding="utf-8"
        )
        (out / f"{name}.cohesion.txt").write_text(summary, encoding="utf-8")
    else:
        print(summary, end="")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    model = model_io.import_model_json(Path(args.model).read_bytes())
    if args.level == "subsystem":
        dot = model_io.export_dot(model.subsystem_graph)
    else:
        graph = includes.FileGraph(
            nodes=model.files,
            edges=model.file_edges,
            external_refs=model.external_refs,
        )
        dot = model_io.export_dot(graph)
    if args.out == "-":
        sys.stdout.write(dot)
    else:
        Path(args.out).write_text(dot, encoding="utf-8")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(model_dir=args.model_dir, frontend_dir=args.frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sydra",
        description="Recover subsystem-level architecture of C/C++ game engines.",
    )
    parser.add_argument("--version", action="version", version=f"sydra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="build the file include graph")
    _add_tree_args(p)
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("map", help="apply mapping rules or suggest new ones")
    _add_tree_args(p)
    p.add_argument("--rules", help="rules file (`SUBSYSTEM_ID GLOB` lines)")
    p.add_argument("--suggest", action="store_true", help="print suggested rules")
    p.add_argument("--keywords", help="keyword table file (`keyword ID` lines)")
    p.add_argument("--out", default="", help="directory for the coverage report")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("analyze", help="full pipeline: model plus all reports")
    _add_tree_args(p)
    p.add_argument("--rules", required=True)
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument(
        "--include-unmapped",
        action="store_true",
        help="keep UNK as a pseudo-subsystem in the lifted graph",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("aggregate", help="combine models into corpus statistics")
    p.add_argument("--corpus", required=True, help="manifest listing model paths")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--k-inner", type=int, default=4, help="inner-core size")
    p.add_argument(
        "--threshold",
        type=int,
        default=None,
        help="minimum engine count for a frequent pair (default: 80%% of corpus)",
    )
    p.add_argument("--max-edges", type=int, default=None, help="cap on kept pairs")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("cohesion", help="folder-structure cohesion report")
    _add_tree_args(p)
    p.add_argument("--rules", help="optional rules file for dispersion by subsystem")
    p.add_argument(
        "--dispersion-exclude",
        action="append",
        default=[],
        metavar="GLOB",
        help="paths ignored for dispersion counting (repeatable)",
    )
    p.add_argument("--out", default="", help="output directory")
    p.set_defaults(func=cmd_cohesion)

    p = sub.add_parser("export", help="render a stored model as DOT")
    p.add_argument("--model", required=True, help="a .sydra.json file")
    p.add_argument("--level", choices=["subsystem", "file"], default="subsystem")
    p.add_argument("--out", default="-", help="output file, `-` for stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="HTTP API plus the viewer")
    p.add_argument("--model-dir", default=".", help="directory of .sydra.json files")
    p.add_argument("--frontend", default=None, help="built viewer directory")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PipelineError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except mapping.RuleError as err:
        print(f"error: rules: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
