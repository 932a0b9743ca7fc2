"""End-to-end runs: scan → parse/resolve → map → lift → metrics → export.

Every fatal error names the failing stage and input; everything else is
a diagnostic line in the run report. Outputs are deterministic for a
given tree regardless of worker count.
"""
from __future__ import annotations

import dataclasses
import os
import posixpath
from dataclasses import dataclass, field
from pathlib import Path

from . import aggregate as agg
from . import cohesion as coh
from . import includes, mapping, metrics, model_io
from .scanning import DEFAULT_EXTENSIONS, scan_tree


class PipelineError(RuntimeError):
    """Fatal pipeline failure; message starts with the failing stage."""


@dataclass(frozen=True)
class RunConfig:
    root: str
    rules_path: str
    include_paths: tuple[str, ...] = ()
    excludes: tuple[str, ...] = ()
    engine_name: str = ""  # empty → basename of root
    commit_ref: str = ""
    output_dir: str = "."
    include_unmapped: bool = False
    normalize_betweenness: bool = True
    workers: int = 1
    extensions: frozenset[str] = DEFAULT_EXTENSIONS

    def resolved_engine_name(self) -> str:
        if self.engine_name:
            return self.engine_name
        return os.path.basename(os.path.abspath(self.root))


@dataclass
class RunArtifacts:
    model_path: Path
    metrics_path: Path
    coverage_path: Path
    unmapped_path: Path
    cohesion_csv_path: Path
    cohesion_text_path: Path
    diagnostics_path: Path
    written: list[Path] = field(default_factory=list)


def _read_text(path: str, stage: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise PipelineError(f"{stage}: cannot read {path}: {err}") from err


def analyze_tree(config: RunConfig) -> tuple[metrics.ArchModel, mapping.MappingCoverage, coh.CohesionReport, list[str]]:
    """Run all in-memory stages, returning model, coverage, cohesion, diagnostics."""
    diagnostics: list[str] = []
    rules_text = _read_text(config.rules_path, "rules")
    try:
        rule_set = mapping.parse_rules(rules_text, warnings=diagnostics)
    except mapping.RuleError as err:
        raise PipelineError(f"rules: {config.rules_path}: {err}") from err

    try:
        files = scan_tree(
            config.root, config.excludes, config.extensions, diagnostics
        )
    except OSError as err:
        raise PipelineError(f"scan: {config.root}: {err}") from err

    graph = includes.build_file_graph(
        config.root,
        files,
        config.include_paths,
        workers=config.workers,
        diagnostics=diagnostics,
    )
    tags = mapping.map_files(files, rule_set)
    coverage = mapping.mapping_coverage(files, rule_set)
    model = metrics.build_model(
        config.resolved_engine_name(),
        config.commit_ref,
        graph,
        tags,
        include_unmapped=config.include_unmapped,
        normalize=config.normalize_betweenness,
    )
    report = coh.cohesion_report(files, tags)
    return model, coverage, report, diagnostics


def run_pipeline(config: RunConfig) -> tuple[metrics.ArchModel, RunArtifacts]:
    """Execute the full pipeline and write the five run artifacts."""
    model, coverage, report, diagnostics = analyze_tree(config)

    out = Path(config.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as err:
        raise PipelineError(f"export: cannot create {out}: {err}") from err

    name = config.resolved_engine_name()
    artifacts = RunArtifacts(
        model_path=out / f"{name}{model_io.MODEL_SUFFIX}",
        metrics_path=out / f"{name}.metrics.csv",
        coverage_path=out / f"{name}.coverage.csv",
        unmapped_path=out / f"{name}.unmapped.txt",
        cohesion_csv_path=out / f"{name}.cohesion.csv",
        cohesion_text_path=out / f"{name}.cohesion.txt",
        diagnostics_path=out / f"{name}.diagnostics.txt",
    )
    stats = coh.folder_stats(list(model.files))
    unmapped_listing = "".join(f"{p}\n" for p in coverage.unmapped_paths)
    diagnostics_text = "".join(f"{line}\n" for line in diagnostics)
    payload: list[tuple[Path, bytes]] = [
        (artifacts.model_path, model_io.export_model_json(model)),
        (artifacts.metrics_path, model_io.metrics_csv(model).encode("utf-8")),
        (artifacts.coverage_path, model_io.coverage_csv(coverage).encode("utf-8")),
        (artifacts.unmapped_path, unmapped_listing.encode("utf-8")),
        (artifacts.cohesion_csv_path, model_io.folder_csv(stats).encode("utf-8")),
        (artifacts.cohesion_text_path, model_io.cohesion_summary(report).encode("utf-8")),
        (artifacts.diagnostics_path, diagnostics_text.encode("utf-8")),
    ]
    for path, data in payload:
        try:
            path.write_bytes(data)
        except OSError as err:
            raise PipelineError(f"export: cannot write {path}: {err}") from err
        artifacts.written.append(path)
    return model, artifacts


def load_corpus(manifest_path: str) -> list[metrics.ArchModel]:
    """Read a corpus manifest: one model path per line, `#` comments.

    Relative entries resolve against the manifest's own directory.
    """
    text = _read_text(manifest_path, "aggregate")
    base = os.path.dirname(os.path.abspath(manifest_path))
    models = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        path = line if os.path.isabs(line) else posixpath.join(base, line)
        data = _read_text(path, "aggregate")
        try:
            models.append(model_io.import_model_json(data))
        except (ValueError, KeyError) as err:
            raise PipelineError(
                f"aggregate: {manifest_path}:{lineno}: bad model {path}: {err}"
            ) from err
    if not models:
        raise PipelineError(f"aggregate: {manifest_path}: manifest lists no models")
    return models


def aggregate_corpus(
    models: list[metrics.ArchModel],
    output_dir: str,
    k_inner: int = 4,
    threshold: int | None = None,
    max_edges: int | None = None,
) -> tuple[agg.EmergentArchitecture, list[Path]]:
    """Write presence/frequency CSVs plus a corpus document with emergent tiers."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    presence = agg.subsystem_presence(models)
    frequency = agg.coupling_frequency(models)
    warnings: list[str] = []
    emergent = agg.emergent_tiers(
        models, k_inner=k_inner, threshold=threshold, max_edges=max_edges,
        warnings=warnings,
    )
    empty = includes.FileGraph(nodes=(), edges=(), external_refs={})
    corpus_model = dataclasses.replace(
        metrics.build_model("corpus", "", empty, {}),
        emergent=model_io.emergent_to_document(emergent),
    )
    written = [
        out / "presence.csv",
        out / "coupling.csv",
        out / f"corpus{model_io.MODEL_SUFFIX}",
    ]
    written[0].write_text(model_io.presence_csv(presence), encoding="utf-8")
    written[1].write_text(model_io.frequency_csv(frequency), encoding="utf-8")
    written[2].write_bytes(model_io.export_model_json(corpus_model))
    if warnings:
        (out / "aggregate.warnings.txt").write_text(
            "".join(f"{w}\n" for w in warnings), encoding="utf-8"
        )
    return emergent, written
