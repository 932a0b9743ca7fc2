/**
 * Expansion state over the view hierarchy.
 *
 * State is an immutable set of expanded node refs; every toggle returns a
 * new set, which makes "expand then collapse restores the prior state" hold
 * by construction and keeps undo/URL-hash syncing trivial.
 */
import type { ViewNode, ViewTree } from './tree.js';

export type ViewState = ReadonlySet<string>;

export function emptyState(): ViewState {
  return new Set();
}

export function isExpandable(node: ViewNode): boolean {
  return node.level !== 'file' && node.children.length > 0;
}

export function isExpanded(state: ViewState, ref: string): boolean {
  return state.has(ref);
}

/** Flip one expandable node; throws on unknown refs and on file leaves. */
export function toggleExpand(tree: ViewTree, state: ViewState, ref: string): ViewState {
  const node = tree.byRef.get(ref);
  if (!node) throw new Error(`unknown node: ${ref}`);
  if (node.level === 'file') throw new Error(`not expandable: ${ref}`);
  const next = new Set(state);
  if (next.has(ref)) {
    next.delete(ref);
  } else {
    next.add(ref);
  }
  return next;
}

/**
 * The finest visible ancestor of a file: the file itself when its subsystem
 * and every folder above it are expanded, otherwise the first collapsed
 * ancestor on the way down. Null for files outside the rendered hierarchy.
 */
export function visibleRefForFile(tree: ViewTree, state: ViewState, fileId: number): string | null {
  const chain = tree.chains.get(fileId);
  if (!chain) return null;
  for (let i = 0; i < chain.length - 1; i++) {
    if (!state.has(chain[i])) return chain[i];
  }
  return chain[chain.length - 1];
}

/** All nodes whose every ancestor is expanded, in deterministic tree order. */
export function visibleNodes(tree: ViewTree, state: ViewState): ViewNode[] {
  const out: ViewNode[] = [];
  const walk = (node: ViewNode): void => {
    out.push(node);
    if (state.has(node.ref)) {
      for (const child of node.children) walk(child);
    }
  };
  for (const root of tree.roots) walk(root);
  return out;
}

/** Refs that exist and are expandable in this tree — used to sanitise hashes. */
export function validExpandedRefs(tree: ViewTree, refs: Iterable<string>): ViewState {
  const next = new Set<string>();
  for (const ref of refs) {
    const node = tree.byRef.get(ref);
    if (node && isExpandable(node)) next.add(ref);
  }
  return next;
}
