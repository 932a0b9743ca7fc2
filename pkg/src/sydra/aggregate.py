"""Cross-engine aggregation: presence, coupling frequency, emergent tiers.

All statistics are presence-based per model — an edge's weight inside one
engine never influences corpus counts — and UNK never participates.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .metrics import ArchModel
from .taxonomy import UNK

log = logging.getLogger("sydra.aggregate")


@dataclass(frozen=True)
class PresenceMatrix:
    engines: tuple[str, ...]
    tags: tuple[str, ...]
    grid: tuple[tuple[bool, ...], ...]  # row per engine, column per tag
    detected: tuple[int, ...]  # row sums

    def share_with_fraction(self, min_fraction: float) -> float:
        """Fraction of engines whose detected share reaches ``min_fraction``."""
        hits = sum(1 for d in self.detected if d / len(self.tags) >= min_fraction)
        return hits / len(self.engines)


@dataclass(frozen=True)
class CouplingFrequency:
    engine_count: int
    #: (from, to, engines containing that edge), count descending then pair.
    pairs: tuple[tuple[str, str, int], ...]


@dataclass(frozen=True)
class EmergentArchitecture:
    inner_core: tuple[str, ...]
    outer_core: tuple[str, ...]
    periphery: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]
    k_inner: int
    threshold: int
    engines: tuple[str, ...]


def _present_tags(model: ArchModel) -> set[str]:
    return {tag for tag in model.tags.values() if tag != UNK}


def subsystem_presence(models: list[ArchModel], tags: tuple[str, ...] | None = None) -> PresenceMatrix:
    """Engine × subsystem boolean grid; presence means ≥1 file so tagged."""
    if not models:
        raise ValueError("presence matrix needs at least one model")
    names = [m.engine_name for m in models]
    if len(set(names)) != len(names):
        raise ValueError("duplicate engine names in corpus")
    if tags is None:
        from .taxonomy import CANONICAL_IDS

        tags = CANONICAL_IDS
    grid = []
    for model in models:
        present = _present_tags(model)
        grid.append(tuple(tag in present for tag in tags))
    return PresenceMatrix(
        engines=tuple(names),
        tags=tags,
        grid=tuple(grid),
        detected=tuple(sum(row) for row in grid),
    )


def _model_edge_pairs(model: ArchModel) -> set[tuple[str, str]]:
    return {
        (a, b) for a, b, _ in model.subsystem_graph.edges if UNK not in (a, b)
    }


def coupling_frequency(models: list[ArchModel]) -> CouplingFrequency:
    """Count, per ordered pair, the engines whose model contains that edge."""
    if not models:
        raise ValueError("coupling frequency needs at least one model")
    counts: dict[tuple[str, str], int] = {}
    for model in models:
        for pair in _model_edge_pairs(model):
            counts[pair] = counts.get(pair, 0) + 1
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return CouplingFrequency(
        engine_count=len(models),
        pairs=tuple((a, b, c) for (a, b), c in ordered),
    )


def mean_normalized_betweenness(models: list[ArchModel]) -> dict[str, float]:
    """Per-tag mean of normalized betweenness; absent tags contribute 0.

    Mean-with-zeros penalizes rarely present subsystems, matching the
    core/periphery intent of the tiering.
    """
    observed: set[str] = set()
    for model in models:
        observed |= _present_tags(model)
    means = {}
    for tag in observed:
        total = sum(
            model.metrics.betweenness_normalized.get(tag, 0.0) for model in models
        )
        means[tag] = total / len(models)
    return means


def default_threshold(engine_count: int) -> int:
    """Qualify pairs present in ≥80% of the corpus (rounded up)."""
    return math.ceil(0.8 * engine_count)


def emergent_tiers(
    models: list[ArchModel],
    k_inner: int = 4,
    threshold: int | None = None,
    max_edges: int | None = None,
    warnings: list[str] | None = None,
) -> EmergentArchitecture:
    """Tier the observed tags and select the frequent coupling edges.

    Inner core: top ``k_inner`` tags by mean normalized betweenness.
    Outer core: remaining tags incident to a selected edge. Periphery:
    everything else observed. Edges keep pairs whose engine count meets
    ``threshold``; if ``max_edges`` forces a choice among equal counts,
    the pair with the higher endpoint-betweenness sum survives.
    """
    if k_inner < 1:
        raise ValueError("k_inner must be ≥ 1")
    means = mean_normalized_betweenness(models)
    observed = sorted(means)
    if threshold is None:
        threshold = default_threshold(len(models))
    if threshold < 1:
        raise ValueError("threshold must be ≥ 1")

    if k_inner >= len(observed):
        if k_inner > len(observed):
            message = (
                f"k_inner={k_inner} exceeds the {len(observed)} observed tags; "
                "every tag lands in the inner core"
            )
            if warnings is not None:
                warnings.append(message)
            log.warning("%s", message)
        inner = list(observed)
    else:
        ranked = sorted(observed, key=lambda tag: (-means[tag], tag))
        inner = ranked[:k_inner]

    frequency = coupling_frequency(models)
    qualifying = [(a, b, c) for a, b, c in frequency.pairs if c >= threshold]
    qualifying.sort(
        key=lambda e: (-e[2], -(means.get(e[0], 0.0) + means.get(e[1], 0.0)), e[:2])
    )
    if max_edges is not None:
        qualifying = qualifying[:max_edges]

    inner_set = set(inner)
    outer = {t for a, b, _ in qualifying for t in (a, b)} - inner_set
    periphery = [t for t in observed if t not in inner_set and t not in outer]
    return EmergentArchitecture(
        inner_core=tuple(sorted(inner)),
        outer_core=tuple(sorted(outer)),
        periphery=tuple(periphery),
        edges=tuple(qualifying),
        k_inner=k_inner,
        threshold=threshold,
        engines=tuple(m.engine_name for m in models),
    )
