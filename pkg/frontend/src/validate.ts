/**
 * Structural validation of model documents.
 *
 * Errors name the failing field (dotted path with indices) so the UI can
 * show exactly what is wrong; a document with any error is never rendered.
 */
import type { Model, ModelFile } from './types.js';
import { isTag } from './types.js';

export const SCHEMA_VERSION = '1';

const TOP_LEVEL_KEYS = [
  'schema_version', 'engine_name', 'commit_ref', 'tool_version',
  'files', 'file_edges', 'external_refs', 'subsystem_graph', 'emergent',
] as const;

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === 'object' && value !== null && !Array.isArray(value);
}

function checkString(errors: string[], obj: Record<string, unknown>, field: string, path: string): void {
  if (typeof obj[field] !== 'string') errors.push(`${path}${field}: expected a string`);
}

function checkNumber(errors: string[], obj: Record<string, unknown>, field: string, path: string): void {
  if (typeof obj[field] !== 'number' || !Number.isFinite(obj[field] as number)) {
    errors.push(`${path}${field}: expected a finite number`);
  }
}

function checkTag(errors: string[], value: unknown, path: string): void {
  if (!isTag(value)) errors.push(`${path}: unknown subsystem tag ${JSON.stringify(value)}`);
}

function validateFiles(errors: string[], files: unknown): Map<number, ModelFile> {
  const byId = new Map<number, ModelFile>();
  if (!Array.isArray(files)) {
    errors.push('files: expected an array');
    return byId;
  }
  files.forEach((entry, i) => {
    const path = `files[${i}].`;
    if (!isRecord(entry)) {
      errors.push(`files[${i}]: expected an object`);
      return;
    }
    checkNumber(errors, entry, 'id', path);
    checkString(errors, entry, 'path', path);
    if (entry.kind !== 'header' && entry.kind !== 'implementation') {
      errors.push(`${path}kind: expected "header" or "implementation"`);
    }
    checkTag(errors, entry.tag, `${path}tag`);
    checkNumber(errors, entry, 'in_degree', path);
    checkNumber(errors, entry, 'out_degree', path);
    if (typeof entry.id === 'number') {
      if (byId.has(entry.id)) errors.push(`${path}id: duplicate file id ${entry.id}`);
      byId.set(entry.id, entry as unknown as ModelFile);
    }
  });
  return byId;
}

function validateFileEdges(errors: string[], edges: unknown, byId: Map<number, ModelFile>): void {
  if (!Array.isArray(edges)) {
    errors.push('file_edges: expected an array');
    return;
  }
  edges.forEach((edge, i) => {
    if (!Array.isArray(edge) || edge.length !== 2 || !edge.every((v) => typeof v === 'number')) {
      errors.push(`file_edges[${i}]: expected a pair of file ids`);
      return;
    }
    for (const id of edge as number[]) {
      if (!byId.has(id)) errors.push(`file_edges[${i}]: unknown file id ${id}`);
    }
  });
}

function validateSubsystemGraph(errors: string[], graph: unknown): void {
  if (!isRecord(graph)) {
    errors.push('subsystem_graph: expected an object');
    return;
  }
  const { nodes, edges } = graph;
  if (!Array.isArray(nodes)) {
    errors.push('subsystem_graph.nodes: expected an array');
  } else {
    nodes.forEach((node, i) => {
      const path = `subsystem_graph.nodes[${i}].`;
      if (!isRecord(node)) {
        errors.push(`subsystem_graph.nodes[${i}]: expected an object`);
        return;
      }
      checkTag(errors, node.id, `${path}id`);
      for (const field of ['file_count', 'in_degree', 'out_degree', 'betweenness_raw', 'betweenness_normalized']) {
        checkNumber(errors, node, field, path);
      }
    });
  }
  if (!Array.isArray(edges)) {
    errors.push('subsystem_graph.edges: expected an array');
  } else {
    edges.forEach((edge, i) => {
      const path = `subsystem_graph.edges[${i}].`;
      if (!isRecord(edge)) {
        errors.push(`subsystem_graph.edges[${i}]: expected an object`);
        return;
      }
      checkTag(errors, edge.from, `${path}from`);
      checkTag(errors, edge.to, `${path}to`);
      checkNumber(errors, edge, 'weight', path);
    });
  }
  checkNumber(errors, graph, 'node_count', 'subsystem_graph.');
  checkNumber(errors, graph, 'edge_count', 'subsystem_graph.');
}

function validateEmergent(errors: string[], emergent: unknown): void {
  if (emergent === null) return;
  if (!isRecord(emergent)) {
    errors.push('emergent: expected an object or null');
    return;
  }
  checkNumber(errors, emergent, 'k_inner', 'emergent.');
  checkNumber(errors, emergent, 'threshold', 'emergent.');
  for (const field of ['engines', 'inner_core', 'outer_core', 'periphery'] as const) {
    const value = emergent[field];
    if (!Array.isArray(value) || !value.every((v) => typeof v === 'string')) {
      errors.push(`emergent.${field}: expected an array of strings`);
    } else if (field !== 'engines') {
      value.forEach((tag, i) => checkTag(errors, tag, `emergent.${field}[${i}]`));
    }
  }
  if (!Array.isArray(emergent.edges)) {
    errors.push('emergent.edges: expected an array');
  } else {
    emergent.edges.forEach((edge, i) => {
      const path = `emergent.edges[${i}].`;
      if (!isRecord(edge)) {
        errors.push(`emergent.edges[${i}]: expected an object`);
        return;
      }
      checkTag(errors, edge.from, `${path}from`);
      checkTag(errors, edge.to, `${path}to`);
      checkNumber(errors, edge, 'count', path);
    });
  }
}

/**
 * Validate an arbitrary parsed JSON value against the model document shape.
 * Returns a list of problems, each naming the failing field; empty means
 * the document is safe to render.
 */
export function validateModel(doc: unknown): string[] {
  const errors: string[] = [];
  if (!isRecord(doc)) return ['document: expected a JSON object'];
  for (const key of TOP_LEVEL_KEYS) {
    if (!(key in doc)) errors.push(`${key}: missing required field`);
  }
  if ('schema_version' in doc && doc.schema_version !== SCHEMA_VERSION) {
    errors.push(`schema_version: expected "${SCHEMA_VERSION}", got ${JSON.stringify(doc.schema_version)}`);
  }
  for (const field of ['engine_name', 'commit_ref', 'tool_version'] as const) {
    if (field in doc) checkString(errors, doc, field, '');
  }
  if ('files' in doc || 'file_edges' in doc) {
    const byId = validateFiles(errors, doc.files);
    if ('file_edges' in doc) validateFileEdges(errors, doc.file_edges, byId);
  }
  if ('external_refs' in doc) {
    if (!Array.isArray(doc.external_refs)) errors.push('external_refs: expected an array');
  }
  if ('subsystem_graph' in doc) validateSubsystemGraph(errors, doc.subsystem_graph);
  if ('emergent' in doc) validateEmergent(errors, doc.emergent);
  return errors;
}

/**
 * Parse and validate a model document; throws with the first failing field
 * on any problem so callers never see a partially-valid model.
 */
export function loadModel(doc: unknown): Model {
  const errors = validateModel(doc);
  if (errors.length > 0) {
    throw new Error(`invalid model document: ${errors[0]}`);
  }
  return doc as Model;
}
