"""Subsystem-graph lifting and coupling metrics.

The file graph is lifted to a weighted directed graph over subsystem tags;
in/out degree and betweenness centrality are computed there. Shortest
paths ignore edge weights: the architectural reading is in terms of
subsystem hops, not include multiplicity.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence, TypeVar

from .includes import FileGraph
from .scanning import SourceFile
from .taxonomy import UNK

N = TypeVar("N", bound=Hashable)


@dataclass(frozen=True)
class SubsystemGraph:
    nodes: tuple[str, ...]  # tag ids, sorted
    edges: tuple[tuple[str, str, int], ...]  # (from, to, weight), sorted


@dataclass(frozen=True)
class MetricsReport:
    in_degree: dict[str, int]
    out_degree: dict[str, int]
    betweenness_raw: dict[str, float]
    betweenness_normalized: dict[str, float]
    node_count: int
    edge_count: int


@dataclass(frozen=True)
class ArchModel:
    engine_name: str
    commit_ref: str
    tool_version: str
    files: tuple[SourceFile, ...]
    tags: dict[int, str]
    file_edges: tuple[tuple[int, int], ...]
    external_refs: dict[str, int]
    subsystem_graph: SubsystemGraph
    metrics: MetricsReport
    file_in_degree: dict[int, int]
    file_out_degree: dict[int, int]
    emergent: dict | None = None


def lift_to_subsystem_graph(
    file_graph: FileGraph, tags: dict[int, str], include_unmapped: bool = False
) -> SubsystemGraph:
    """Aggregate file edges into weighted subsystem edges.

    Intra-subsystem edges vanish (coupling is strictly inter-subsystem);
    UNK files and their edges are dropped unless ``include_unmapped``
    presents UNK as a pseudo-subsystem. A missing tag violates the
    precondition and raises KeyError.
    """
    nodes: set[str] = set()
    for f in file_graph.nodes:
        tag = tags[f.id]
        if tag != UNK or include_unmapped:
            nodes.add(tag)
    weights: dict[tuple[str, str], int] = {}
    for a, b in file_graph.edges:
        ta, tb = tags[a], tags[b]
        if ta == tb:
            continue
        if not include_unmapped and UNK in (ta, tb):
            continue
        weights[(ta, tb)] = weights.get((ta, tb), 0) + 1
    return SubsystemGraph(
        nodes=tuple(sorted(nodes)),
        edges=tuple((a, b, w) for (a, b), w in sorted(weights.items())),
    )


def degree_metrics(g: SubsystemGraph) -> tuple[dict[str, int], dict[str, int]]:
    """Distinct-neighbor in/out degrees (edge weights ignored)."""
    in_degree = {v: 0 for v in g.nodes}
    out_degree = {v: 0 for v in g.nodes}
    for a, b, _ in g.edges:
        out_degree[a] += 1
        in_degree[b] += 1
    return in_degree, out_degree


def betweenness_centrality(
    nodes: Sequence[N], edges: Iterable[tuple[N, N]]
) -> dict[N, float]:
    """Raw directed betweenness via per-source BFS with back-propagation.

    For each ordered pair (s,t), every node v strictly between them
    accrues (shortest s→t paths through v) / (all shortest s→t paths).
    """
    adjacency: dict[N, list[N]] = {v: [] for v in nodes}
    for a, b in edges:
        adjacency[a].append(b)

    centrality: dict[N, float] = {v: 0.0 for v in nodes}
    for source in nodes:
        order: list[N] = []
        preds: dict[N, list[N]] = {v: [] for v in nodes}
        sigma: dict[N, int] = {v: 0 for v in nodes}
        dist: dict[N, int] = {v: -1 for v in nodes}
        sigma[source] = 1
        dist[source] = 0
        queue: deque[N] = deque([source])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta: dict[N, float] = {v: 0.0 for v in nodes}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w is not source:
                centrality[w] += delta[w]
    return centrality


def normalize_betweenness(raw: dict[N, float], node_count: int) -> dict[N, float]:
    """Scale by 1/((n−1)(n−2)); below 3 nodes every raw value is already 0."""
    if node_count < 3:
        return {v: 0.0 for v in raw}
    scale = 1.0 / ((node_count - 1) * (node_count - 2))
    return {v: value * scale for v, value in raw.items()}


def compute_metrics(g: SubsystemGraph, normalize: bool = True) -> MetricsReport:
    in_degree, out_degree = degree_metrics(g)
    raw = betweenness_centrality(g.nodes, [(a, b) for a, b, _ in g.edges])
    normalized = normalize_betweenness(raw, len(g.nodes)) if normalize else dict(raw)
    return MetricsReport(
        in_degree=in_degree,
        out_degree=out_degree,
        betweenness_raw=raw,
        betweenness_normalized=normalized,
        node_count=len(g.nodes),
        edge_count=len(g.edges),
    )


def file_degrees(
    file_graph: FileGraph,
) -> tuple[dict[int, int], dict[int, int]]:
    """Per-file distinct-neighbor degrees, for hub-header inspection."""
    in_degree = {f.id: 0 for f in file_graph.nodes}
    out_degree = {f.id: 0 for f in file_graph.nodes}
    for a, b in file_graph.edges:
        out_degree[a] += 1
        in_degree[b] += 1
    return in_degree, out_degree


def build_model(
    engine_name: str,
    commit_ref: str,
    file_graph: FileGraph,
    tags: dict[int, str],
    include_unmapped: bool = False,
    normalize: bool = True,
    tool_version: str | None = None,
) -> ArchModel:
    """Assemble the per-engine model with canonical ordering throughout."""
    from . import __version__

    subsystem_graph = lift_to_subsystem_graph(file_graph, tags, include_unmapped)
    in_degree, out_degree = file_degrees(file_graph)
    return ArchModel(
        engine_name=engine_name,
        commit_ref=commit_ref,
        tool_version=tool_version if tool_version is not None else __version__,
        files=tuple(file_graph.nodes),
        tags=dict(sorted(tags.items())),
        file_edges=tuple(sorted(file_graph.edges)),
        external_refs=dict(sorted(file_graph.external_refs.items())),
        subsystem_graph=subsystem_graph,
        metrics=compute_metrics(subsystem_graph, normalize),
        file_in_degree=in_degree,
        file_out_degree=out_degree,
    )
