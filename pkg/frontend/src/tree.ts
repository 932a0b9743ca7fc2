/**
 * View hierarchy: subsystem -> folder chain -> file.
 *
 * Folder nodes are scoped per subsystem (the same directory may host files
 * of several tags, and each tag owns its own folder chain), so every file's
 * ancestor chain carries exactly one tag — the file's own.
 */
import type { Model, ModelFile, Tag } from './types.js';

export type NodeLevel = 'subsystem' | 'folder' | 'file';

export interface ViewNode {
  ref: string;
  level: NodeLevel;
  tag: Tag;
  /** Display name: tag id, folder segment, or file basename. */
  label: string;
  /** Empty for subsystems; folder path or file path otherwise. */
  path: string;
  children: ViewNode[];
  fileId: number | null;
  /** Number of descendant files (1 for a file node). */
  fileCount: number;
}

export interface ViewTree {
  model: Model;
  /** One root per subsystem present in the model's subsystem graph. */
  roots: ViewNode[];
  byRef: Map<string, ViewNode>;
  parentOf: Map<string, string | null>;
  /** File id -> [subsystem ref, folder refs..., file ref]; only rendered files. */
  chains: Map<number, string[]>;
}

export function subRef(tag: Tag): string {
  return `sub:${tag}`;
}

export function dirRef(tag: Tag, path: string): string {
  return `dir:${tag}:${path}`;
}

export function fileRef(id: number): string {
  return `file:${id}`;
}

function basename(path: string): string {
  const i = path.lastIndexOf('/');
  return i < 0 ? path : path.slice(i + 1);
}

function compareChildren(a: ViewNode, b: ViewNode): number {
  if (a.level !== b.level) return a.level === 'folder' ? -1 : 1;
  return a.label < b.label ? -1 : a.label > b.label ? 1 : 0;
}

function insertFile(tree: ViewTree, root: ViewNode, file: ModelFile): void {
  const chain = [root.ref];
  let parent = root;
  const segments = file.path.split('/');
  for (let depth = 0; depth < segments.length - 1; depth++) {
    const folderPath = segments.slice(0, depth + 1).join('/');
    const ref = dirRef(file.tag, folderPath);
    let folder = tree.byRef.get(ref);
    if (!folder) {
      folder = {
        ref,
        level: 'folder',
        tag: file.tag,
        label: segments[depth],
        path: folderPath,
        children: [],
        fileId: null,
        fileCount: 0,
      };
      tree.byRef.set(ref, folder);
      tree.parentOf.set(ref, parent.ref);
      parent.children.push(folder);
    }
    folder.fileCount += 1;
    chain.push(ref);
    parent = folder;
  }
  const leaf: ViewNode = {
    ref: fileRef(file.id),
    level: 'file',
    tag: file.tag,
    label: basename(file.path),
    path: file.path,
    children: [],
    fileId: file.id,
    fileCount: 1,
  };
  tree.byRef.set(leaf.ref, leaf);
  tree.parentOf.set(leaf.ref, parent.ref);
  parent.children.push(leaf);
  chain.push(leaf.ref);
  tree.chains.set(file.id, chain);
}

/**
 * Build the view hierarchy for a validated model.
 *
 * Subsystems come from the model's subsystem graph — a tag with files but no
 * graph node (UNK outside include-unmapped runs) is not rendered, matching
 * the document's own aggregation.
 */
export function buildTree(model: Model): ViewTree {
  const tree: ViewTree = {
    model,
    roots: [],
    byRef: new Map(),
    parentOf: new Map(),
    chains: new Map(),
  };
  const present = [...model.subsystem_graph.nodes].sort((a, b) => (a.id < b.id ? -1 : 1));
  for (const node of present) {
    const root: ViewNode = {
      ref: subRef(node.id),
      level: 'subsystem',
      tag: node.id,
      label: node.id,
      path: '',
      children: [],
      fileId: null,
      fileCount: 0,
    };
    tree.roots.push(root);
    tree.byRef.set(root.ref, root);
    tree.parentOf.set(root.ref, null);
  }
  const files = [...model.files].sort((a, b) => (a.path < b.path ? -1 : a.path > b.path ? 1 : 0));
  for (const file of files) {
    const root = tree.byRef.get(subRef(file.tag));
    if (!root) continue;
    root.fileCount += 1;
    insertFile(tree, root, file);
  }
  for (const node of tree.byRef.values()) {
    node.children.sort(compareChildren);
  }
  return tree;
}
