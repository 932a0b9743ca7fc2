/**
 * Keyword search over file paths: case-insensitive substring match, results
 * grouped by subsystem for the side panel. Works the same in clustered and
 * unclustered display modes — the panel is display-mode independent.
 */
import type { Model, ModelFile, Tag } from './types.js';

export interface SearchGroup {
  tag: Tag;
  files: ModelFile[];
}

/** Ids of every file whose path contains the keyword (case-insensitive). */
export function matchIds(model: Model, keyword: string): Set<number> {
  const needle = keyword.toLowerCase();
  const ids = new Set<number>();
  if (needle === '') return ids;
  for (const file of model.files) {
    if (file.path.toLowerCase().includes(needle)) ids.add(file.id);
  }
  return ids;
}

/** Matches grouped by tag (groups and files both sorted) for the side panel. */
export function searchFiles(model: Model, keyword: string): SearchGroup[] {
  const ids = matchIds(model, keyword);
  const byTag = new Map<Tag, ModelFile[]>();
  for (const file of model.files) {
    if (!ids.has(file.id)) continue;
    const group = byTag.get(file.tag);
    if (group) {
      group.push(file);
    } else {
      byTag.set(file.tag, [file]);
    }
  }
  return [...byTag.entries()]
    .sort(([a], [b]) => (a < b ? -1 : 1))
    .map(([tag, files]) => ({
      tag,
      files: files.sort((a, b) => (a.path < b.path ? -1 : a.path > b.path ? 1 : 0)),
    }));
}
