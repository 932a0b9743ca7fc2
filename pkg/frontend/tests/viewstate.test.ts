import { describe, expect, it } from 'vitest';
import { buildTree, dirRef, fileRef, subRef } from '../src/tree.js';
import {
  emptyState,
  isExpandable,
  isExpanded,
  toggleExpand,
  validExpandedRefs,
  visibleNodes,
  visibleRefForFile,
} from '../src/viewstate.js';
import { handModel, miniModel, mulberry32 } from './helpers.js';

describe('toggleExpand', () => {
  it('expands and collapses without mutating the previous state', () => {
    const tree = buildTree(handModel());
    const s0 = emptyState();
    const s1 = toggleExpand(tree, s0, subRef('AUD'));
    expect(isExpanded(s1, subRef('AUD'))).toBe(true);
    expect(isExpanded(s0, subRef('AUD'))).toBe(false);
    const s2 = toggleExpand(tree, s1, subRef('AUD'));
    expect([...s2].sort()).toEqual([...s0].sort());
  });

  it('rejects file refs and unknown refs', () => {
    const tree = buildTree(handModel());
    expect(() => toggleExpand(tree, emptyState(), fileRef(0))).toThrow('not expandable');
    expect(() => toggleExpand(tree, emptyState(), 'sub:ZZZ')).toThrow('unknown node');
  });

  it('toggle is an involution from any reachable state', () => {
    const tree = buildTree(miniModel());
    const expandable = [...tree.byRef.values()].filter(isExpandable).map((n) => n.ref);
    const rand = mulberry32(7);
    let state = emptyState();
    for (let i = 0; i < 50; i++) {
      const ref = expandable[Math.floor(rand() * expandable.length)];
      const once = toggleExpand(tree, state, ref);
      const twice = toggleExpand(tree, once, ref);
      expect([...twice].sort()).toEqual([...state].sort());
      state = once;
    }
  });
});

describe('visibleRefForFile', () => {
  it('rolls up to the first collapsed ancestor', () => {
    const tree = buildTree(handModel());
    let state = emptyState();
    expect(visibleRefForFile(tree, state, 0)).toBe(subRef('AUD'));
    state = toggleExpand(tree, state, subRef('AUD'));
    expect(visibleRefForFile(tree, state, 0)).toBe(dirRef('AUD', 'audio'));
    state = toggleExpand(tree, state, dirRef('AUD', 'audio'));
    expect(visibleRefForFile(tree, state, 0)).toBe(fileRef(0));
    expect(visibleRefForFile(tree, state, 3)).toBe(subRef('COR'));
  });

  it('returns null for files outside the rendered hierarchy', () => {
    const model = miniModel();
    const tree = buildTree(model);
    const unmapped = model.files.find((f) => f.tag === 'UNK');
    expect(visibleRefForFile(tree, emptyState(), unmapped!.id)).toBeNull();
  });

  it('ignores expanded descendants below a collapsed ancestor', () => {
    const tree = buildTree(handModel());
    const inner = toggleExpand(tree, emptyState(), dirRef('AUD', 'audio'));
    expect(visibleRefForFile(tree, inner, 0)).toBe(subRef('AUD'));
  });
});

describe('visibleNodes', () => {
  it('lists only roots when everything is collapsed', () => {
    const tree = buildTree(miniModel());
    expect(visibleNodes(tree, emptyState()).map((n) => n.ref)).toEqual(
      tree.roots.map((n) => n.ref),
    );
  });

  it('reveals children of expanded nodes in tree order', () => {
    const tree = buildTree(handModel());
    const state = toggleExpand(tree, emptyState(), subRef('AUD'));
    expect(visibleNodes(tree, state).map((n) => n.ref)).toEqual([
      subRef('AUD'),
      dirRef('AUD', 'audio'),
      subRef('COR'),
      subRef('LLR'),
    ]);
  });
});

describe('validExpandedRefs', () => {
  it('keeps expandable refs and drops junk, files, and unknowns', () => {
    const tree = buildTree(handModel());
    const state = validExpandedRefs(tree, [
      subRef('AUD'),
      fileRef(0),
      'sub:ZZZ',
      dirRef('COR', 'core'),
      '',
    ]);
    expect([...state].sort()).toEqual([dirRef('COR', 'core'), subRef('AUD')].sort());
  });
});
