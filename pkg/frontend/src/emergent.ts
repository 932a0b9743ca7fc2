/**
 * Tier diagram data for the emergent reference architecture: three
 * concentric tiers (inner core, outer core, periphery) with the frequent
 * edges selected by the aggregator. Pure reshaping — the document is the
 * single source of truth for membership, counts, and order.
 */
import type { EmergentEdge, Model, Tag } from './types.js';

export interface TierDiagram {
  inner: Tag[];
  outer: Tag[];
  periphery: Tag[];
  edges: EmergentEdge[];
  threshold: number;
  engineCount: number;
}

/** Null when the document has no aggregated emergent section (single-model runs). */
export function emergentView(model: Model): TierDiagram | null {
  const arch = model.emergent;
  if (arch === null) return null;
  return {
    inner: [...arch.inner_core],
    outer: [...arch.outer_core],
    periphery: [...arch.periphery],
    edges: arch.edges.map((e) => ({ ...e })),
    threshold: arch.threshold,
    engineCount: arch.engines.length,
  };
}
