/**
 * Neighbor panel for a single file: incoming and outgoing file edges with
 * their subsystems, plus the file's own tag, path, and degrees — the
 * impact-analysis view ("who includes this, who does it include").
 */
import type { Model, ModelFile, Tag } from './types.js';

export interface NeighborGroup {
  tag: Tag;
  files: ModelFile[];
}

export interface NeighborPanel {
  file: ModelFile;
  /** Files that include this one, grouped by their subsystem. */
  incoming: NeighborGroup[];
  /** Files this one includes, grouped by their subsystem. */
  outgoing: NeighborGroup[];
}

function groupByTag(files: ModelFile[]): NeighborGroup[] {
  const byTag = new Map<Tag, ModelFile[]>();
  for (const file of files) {
    const group = byTag.get(file.tag);
    if (group) {
      group.push(file);
    } else {
      byTag.set(file.tag, [file]);
    }
  }
  return [...byTag.entries()]
    .sort(([a], [b]) => (a < b ? -1 : 1))
    .map(([tag, members]) => ({
      tag,
      files: members.sort((a, b) => (a.path < b.path ? -1 : a.path > b.path ? 1 : 0)),
    }));
}

/** Build the neighbor panel for a file id; throws on unknown ids. */
export function inspectFile(model: Model, fileId: number): NeighborPanel {
  const byId = new Map(model.files.map((f) => [f.id, f]));
  const file = byId.get(fileId);
  if (!file) throw new Error(`unknown file id: ${fileId}`);
  const incoming: ModelFile[] = [];
  const outgoing: ModelFile[] = [];
  for (const [src, dst] of model.file_edges) {
    if (dst === fileId) {
      const other = byId.get(src);
      if (other) incoming.push(other);
    }
    if (src === fileId) {
      const other = byId.get(dst);
      if (other) outgoing.push(other);
    }
  }
  return { file, incoming: groupByTag(incoming), outgoing: groupByTag(outgoing) };
}
