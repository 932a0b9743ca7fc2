/**
 * Shared test helpers: fixture loading, a hand-built 5-file model with all
 * aggregate values derived by hand, a seeded PRNG for scripted action
 * sequences, and an independent cross-tag edge-count oracle computed
 * straight from the document (never via the modules under test).
 */
import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import type { Model } from '../src/types.js';
import { loadModel } from '../src/validate.js';

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture(name: string): Model {
  return loadModel(JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf8')));
}

export function miniModel(): Model {
  return loadFixture('mini_engine.sydra.json');
}

export function corpusModel(): Model {
  return loadFixture('corpus.sydra.json');
}

/**
 * Five files over three subsystems. Hand-derived subsystem weights:
 * AUD->COR 2 (mixer->object, sound->object), AUD->LLR 1 (mixer->device),
 * LLR->COR 1 (device->object); sound->mixer stays inside AUD.
 */
export function handModel(): Model {
  return loadModel({
    schema_version: '1',
    engine_name: 'hand',
    commit_ref: 'fixture',
    tool_version: '0.0.0',
    files: [
      { id: 0, path: 'audio/mixer.cpp', kind: 'implementation', tag: 'AUD', in_degree: 1, out_degree: 2 },
      { id: 1, path: 'audio/sound.h', kind: 'header', tag: 'AUD', in_degree: 0, out_degree: 2 },
      { id: 2, path: 'core/free.h', kind: 'header', tag: 'COR', in_degree: 0, out_degree: 0 },
      { id: 3, path: 'core/object.h', kind: 'header', tag: 'COR', in_degree: 3, out_degree: 0 },
      { id: 4, path: 'render/device.h', kind: 'header', tag: 'LLR', in_degree: 1, out_degree: 1 },
    ],
    file_edges: [[0, 3], [1, 3], [0, 4], [4, 3], [1, 0]],
    external_refs: [],
    subsystem_graph: {
      nodes: [
        { id: 'AUD', file_count: 2, in_degree: 0, out_degree: 2, betweenness_raw: 0, betweenness_normalized: 0 },
        { id: 'COR', file_count: 2, in_degree: 2, out_degree: 0, betweenness_raw: 0, betweenness_normalized: 0 },
        { id: 'LLR', file_count: 1, in_degree: 1, out_degree: 1, betweenness_raw: 0, betweenness_normalized: 0 },
      ],
      edges: [
        { from: 'AUD', to: 'COR', weight: 2 },
        { from: 'AUD', to: 'LLR', weight: 1 },
        { from: 'LLR', to: 'COR', weight: 1 },
      ],
      node_count: 3,
      edge_count: 3,
    },
    emergent: null,
  });
}

export function emptyModel(): Model {
  return loadModel({
    schema_version: '1',
    engine_name: 'empty',
    commit_ref: 'fixture',
    tool_version: '0.0.0',
    files: [],
    file_edges: [],
    external_refs: [],
    subsystem_graph: { nodes: [], edges: [], node_count: 0, edge_count: 0 },
    emergent: null,
  });
}

/** Deterministic PRNG (mulberry32) for scripted interaction sequences. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Oracle for the weight-conservation invariant: directed cross-tag file-edge
 * counts keyed "FROM->TO", restricted to tags the document's subsystem graph
 * actually renders. Computed directly from files/file_edges.
 */
export function crossTagCounts(model: Model): Map<string, number> {
  const tagOf = new Map(model.files.map((f) => [f.id, f.tag]));
  const rendered = new Set(model.subsystem_graph.nodes.map((n) => n.id));
  const counts = new Map<string, number>();
  for (const [src, dst] of model.file_edges) {
    const a = tagOf.get(src);
    const b = tagOf.get(dst);
    if (a === undefined || b === undefined || a === b) continue;
    if (!rendered.has(a) || !rendered.has(b)) continue;
    const key = `${a}->${b}`;
    counts.set(key, (counts.get(key) ?? 0) + 1);
  }
  return counts;
}
