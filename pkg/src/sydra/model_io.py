"""Model serialization and report writers.

`.sydra.json` is a single self-contained document per engine — tagged
files, file edges, subsystem graph with metrics, optional emergent
section — written canonically (fixed key order, sorted arrays, UTF-8)
so identical models are identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from .aggregate import CouplingFrequency, EmergentArchitecture, PresenceMatrix
from .cohesion import CohesionReport, FolderStats
from .includes import FileGraph
from .mapping import MappingCoverage
from .metrics import ArchModel, MetricsReport, SubsystemGraph
from .scanning import SourceFile

SCHEMA_VERSION = "1"

#: Extension every model document uses on disk.
MODEL_SUFFIX = ".sydra.json"


def model_to_document(model: ArchModel) -> dict[str, Any]:
    g = model.subsystem_graph
    m = model.metrics
    return {
        "schema_version": SCHEMA_VERSION,
        "engine_name": model.engine_name,
        "commit_ref": model.commit_ref,
        "tool_version": model.tool_version,
        "files": [
            {
                "id": f.id,
                "path": f.path,
                "kind": f.kind,
                "tag": model.tags[f.id],
                "in_degree": model.file_in_degree[f.id],
                "out_degree": model.file_out_degree[f.id],
            }
            for f in model.files
        ],
        "file_edges": [list(edge) for edge in model.file_edges],
        "external_refs": [
            {"path": path, "count": count}
            for path, count in sorted(model.external_refs.items())
        ],
        "subsystem_graph": {
            "nodes": [
                {
                    "id": node,
                    "file_count": sum(1 for t in model.tags.values() if t == node),
                    "in_degree": m.in_degree[node],
                    "out_degree": m.out_degree[node],
                    "betweenness_raw": m.betweenness_raw[node],
                    "betweenness_normalized": m.betweenness_normalized[node],
                }
                for node in g.nodes
            ],
            "edges": [
                {"from": a, "to": b, "weight": w} for a, b, w in g.edges
            ],
            "node_count": m.node_count,
            "edge_count": m.edge_count,
        },
        "emergent": model.emergent,
    }


def emergent_to_document(arch: EmergentArchitecture) -> dict[str, Any]:
    return {
        "k_inner": arch.k_inner,
        "threshold": arch.threshold,
        "engines": list(arch.engines),
        "inner_core": list(arch.inner_core),
        "outer_core": list(arch.outer_core),
        "periphery": list(arch.periphery),
        "edges": [{"from": a, "to": b, "count": c} for a, b, c in arch.edges],
    }


def export_model_json(model: ArchModel) -> bytes:
    document = model_to_document(model)
    return (json.dumps(document, indent=2, ensure_ascii=True) + "\n").encode("utf-8")


def import_model_json(data: bytes | str) -> ArchModel:
    document = json.loads(data)
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {version!r}")
    files = tuple(
        SourceFile(entry["id"], entry["path"], entry["kind"])
        for entry in document["files"]
    )
    tags = {entry["id"]: entry["tag"] for entry in document["files"]}
    nodes = document["subsystem_graph"]["nodes"]
    edges = document["subsystem_graph"]["edges"]
    graph = SubsystemGraph(
        nodes=tuple(entry["id"] for entry in nodes),
        edges=tuple((e["from"], e["to"], e["weight"]) for e in edges),
    )
    metrics = MetricsReport(
        in_degree={e["id"]: e["in_degree"] for e in nodes},
        out_degree={e["id"]: e["out_degree"] for e in nodes},
        betweenness_raw={e["id"]: e["betweenness_raw"] for e in nodes},
        betweenness_normalized={
            e["id"]: e["betweenness_normalized"] for e in nodes
        },
        node_count=document["subsystem_graph"]["node_count"],
        edge_count=document["subsystem_graph"]["edge_count"],
    )
    return ArchModel(
        engine_name=document["engine_name"],
        commit_ref=document["commit_ref"],
        tool_version=document["tool_version"],
        files=files,
        tags=tags,
        file_edges=tuple((a, b) for a, b in document["file_edges"]),
        external_refs={
            entry["path"]: entry["count"] for entry in document["external_refs"]
        },
        subsystem_graph=graph,
        metrics=metrics,
        file_in_degree={e["id"]: e["in_degree"] for e in document["files"]},
        file_out_degree={e["id"]: e["out_degree"] for e in document["files"]},
        emergent=document.get("emergent"),
    )


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: FileGraph | SubsystemGraph) -> str:
    """Render either graph level as a DOT digraph with stable ordering."""
    lines = ["digraph sydra {"]
    if isinstance(graph, SubsystemGraph):
        for node in graph.nodes:
            lines.append(f"  {_quote(node)};")
        for a, b, w in graph.edges:
            lines.append(f"  {_quote(a)} -> {_quote(b)} [label={_quote(str(w))}];")
    else:
        for f in graph.nodes:
            lines.append(f"  {_quote(f.path)};")
        paths = {f.id: f.path for f in graph.nodes}
        for a, b in graph.edges:
            lines.append(f"  {_quote(paths[a])} -> {_quote(paths[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv(rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def metrics_csv(model: ArchModel) -> str:
    m = model.metrics
    rows: list[list[Any]] = [
        ["node", "in_degree", "out_degree", "betweenness_raw", "betweenness_normalized"]
    ]
    for node in model.subsystem_graph.nodes:
        rows.append(
            [
                node,
                m.in_degree[node],
                m.out_degree[node],
                m.betweenness_raw[node],
                m.betweenness_normalized[node],
            ]
        )
    return _csv(rows)


def coverage_csv(coverage: MappingCoverage) -> str:
    rows: list[list[Any]] = [["subsystem", "file_count"]]
    for tag, count in coverage.per_subsystem.items():
        rows.append([tag, count])
    return _csv(rows)


def presence_csv(matrix: PresenceMatrix) -> str:
    rows: list[list[Any]] = [["engine", *matrix.tags, "detected"]]
    for engine, row, detected in zip(matrix.engines, matrix.grid, matrix.detected):
        rows.append([engine, *(int(v) for v in row), detected])
    return _csv(rows)


def frequency_csv(frequency: CouplingFrequency) -> str:
    rows: list[list[Any]] = [["from", "to", "count"]]
    rows.extend([a, b, c] for a, b, c in frequency.pairs)
    return _csv(rows)


def folder_csv(stats: list[FolderStats]) -> str:
    rows: list[list[Any]] = [
        ["folder", "depth", "direct_files", "recursive_files", "children"]
    ]
    for s in stats:
        rows.append([s.folder, s.depth, s.direct_files, s.recursive_files, s.children])
    return _csv(rows)


def cohesion_summary(report: CohesionReport) -> str:
    lines = [
        f"files: {report.total_files}",
        f"folders: {report.total_folders}",
        f"max_depth: {report.max_depth}",
        f"concentration: {report.concentration:.4f} "
        f"({len(report.covering)} folder(s) cover >=50% of files: "
        f"{', '.join(report.covering)})",
        "dispersion (top-level directories per subsystem):",
    ]
    for tag, count in report.dispersion.items():
        lines.append(f"  {tag}: {count}")
    if report.flags:
        lines.append("repeated-name nesting:")
        for flag in report.flags:
            lines.append(f"  {flag.parent} contains {flag.child} ({len(flag.files)} files)")
            for path in flag.files:
                lines.append(f"    {path}")
    else:
        lines.append("repeated-name nesting: none")
    return "\n".join(lines) + "\n"
