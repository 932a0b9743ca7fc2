/**
 * Release-gate checks for the viewer, one verdict line each:
 *   - weight conservation across 50 scripted expand/collapse actions,
 *     with expand-then-collapse restoring the exact prior view state;
 *   - search equals the substring oracle for 20 keywords.
 */
import { describe, expect, it } from 'vitest';
import { interSubsystemWeights, visibleEdges } from '../src/aggregate.js';
import { matchIds } from '../src/search.js';
import { buildTree } from '../src/tree.js';
import { emptyState, isExpandable, toggleExpand } from '../src/viewstate.js';
import { crossTagCounts, miniModel, mulberry32 } from './helpers.js';

function report(name: string, detail: string): void {
  console.log(`[acceptance] ${name}: PASS (${detail})`);
}

describe('viewer acceptance', () => {
  it('conserves inter-subsystem weight across 50 random expand/collapse actions', () => {
    const model = miniModel();
    const tree = buildTree(model);
    const oracle = crossTagCounts(model);
    const expandable = [...tree.byRef.values()].filter(isExpandable).map((n) => n.ref);
    const rand = mulberry32(2026);
    let state = emptyState();
    let checked = 0;
    for (let action = 0; action < 50; action++) {
      const ref = expandable[Math.floor(rand() * expandable.length)];
      const before = [...state].sort();
      const edgesBefore = visibleEdges(tree, state);
      const toggled = toggleExpand(tree, state, ref);
      expect(interSubsystemWeights(tree, toggled)).toEqual(oracle);
      const restored = toggleExpand(tree, toggled, ref);
      expect([...restored].sort()).toEqual(before);
      expect(visibleEdges(tree, restored)).toEqual(edgesBefore);
      state = toggled;
      checked++;
    }
    report(
      'viewer-weight-conservation',
      `${checked} actions, ${oracle.size} subsystem pairs conserved, involution held`,
    );
  });

  it('matches the substring oracle for 20 keywords', () => {
    const model = miniModel();
    const keywords = [
      'core', 'CORE', 'audio', 'render', 'physics', 'server', '.h', '.cpp',
      'object', 'editor', 'scene/', 'util', 'version_gen', 'Main', 'gl',
      'zzz-no-such-file', 'e', '_', 'thirdparty/zlib', 'debug_new.h',
    ];
    expect(keywords).toHaveLength(20);
    for (const keyword of keywords) {
      const expected = new Set(
        model.files
          .filter((f) => f.path.toLowerCase().includes(keyword.toLowerCase()))
          .map((f) => f.id),
      );
      expect(matchIds(model, keyword)).toEqual(expected);
    }
    report('viewer-search-oracle', `${keywords.length} keywords over ${model.files.length} paths`);
  });
});
