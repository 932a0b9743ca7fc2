/**
 * Shapes of the `.sydra.json` model document consumed by the viewer.
 *
 * The viewer is read-only: documents are parsed once, validated, and never
 * mutated afterwards.
 */

/** The 16 subsystem tags plus UNK for unmapped files. */
export const TAGS = [
  'AUD', 'COR', 'DEB', 'EDI', 'FES', 'GMP', 'HID', 'LLR', 'OMP',
  'PHY', 'PLA', 'RES', 'SDK', 'SGC', 'SKA', 'UNK', 'VFX',
] as const;

export type Tag = (typeof TAGS)[number];

export const TAG_NAMES: Record<Tag, string> = {
  AUD: 'Audio',
  COR: 'Core',
  DEB: 'Debugging',
  EDI: 'Editor',
  FES: 'Front End & UI',
  GMP: 'Gameplay Foundations',
  HID: 'Human Interface Devices',
  LLR: 'Low-Level Renderer',
  OMP: 'Online Multiplayer',
  PHY: 'Physics',
  PLA: 'Platform',
  RES: 'Resources',
  SDK: 'Third-Party SDKs',
  SGC: 'Scene Graph & Culling',
  SKA: 'Skeletal Animation',
  UNK: 'Unmapped',
  VFX: 'Visual Effects',
};

export interface ModelFile {
  id: number;
  path: string;
  kind: 'header' | 'implementation';
  tag: Tag;
  in_degree: number;
  out_degree: number;
}

export interface ExternalRef {
  path: string;
  count: number;
}

export interface SubsystemNode {
  id: Tag;
  file_count: number;
  in_degree: number;
  out_degree: number;
  betweenness_raw: number;
  betweenness_normalized: number;
}

export interface SubsystemEdge {
  from: Tag;
  to: Tag;
  weight: number;
}

export interface SubsystemGraph {
  nodes: SubsystemNode[];
  edges: SubsystemEdge[];
  node_count: number;
  edge_count: number;
}

export interface EmergentEdge {
  from: Tag;
  to: Tag;
  count: number;
}

export interface EmergentArchitecture {
  k_inner: number;
  threshold: number;
  engines: string[];
  inner_core: Tag[];
  outer_core: Tag[];
  periphery: Tag[];
  edges: EmergentEdge[];
}

export interface Model {
  schema_version: string;
  engine_name: string;
  commit_ref: string;
  tool_version: string;
  files: ModelFile[];
  /** Directed pairs of file ids: [includer, included]. */
  file_edges: [number, number][];
  external_refs: ExternalRef[];
  subsystem_graph: SubsystemGraph;
  emergent: EmergentArchitecture | null;
}

export function isTag(value: unknown): value is Tag {
  return typeof value === 'string' && (TAGS as readonly string[]).includes(value);
}
