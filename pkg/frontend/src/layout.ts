/**
 * Geometry for the map canvas. Presentation only — nothing here carries
 * invariants. Subsystem boxes flow onto a fixed grid of rows; children of an
 * expanded node are arranged by a small deterministic force relaxation
 * (circle start, pairwise repulsion, pull to center) inside the parent box.
 */
import type { ViewNode } from './tree.js';
import type { ViewState } from './viewstate.js';

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface MapLayout {
  rects: Map<string, Rect>;
  width: number;
  height: number;
}

const SUB_W = 132;
const SUB_H = 56;
const DIR_W = 118;
const DIR_H = 40;
const FILE_W = 118;
const FILE_H = 26;
const PAD = 14;
const HEADER = 26;
const GAP = 24;

interface Sized {
  node: ViewNode;
  w: number;
  h: number;
  children: Sized[];
  /** Position relative to the parent box, set during relaxation. */
  x: number;
  y: number;
}

function baseSize(node: ViewNode): [number, number] {
  if (node.level === 'subsystem') return [SUB_W, SUB_H];
  if (node.level === 'folder') return [DIR_W, DIR_H];
  return [FILE_W, FILE_H];
}

/** Deterministic force relaxation of child boxes around the local origin. */
function relax(children: Sized[]): void {
  const n = children.length;
  const radius = Math.max(60, 26 * Math.sqrt(n) * 2);
  children.forEach((child, i) => {
    const angle = (2 * Math.PI * i) / n;
    child.x = radius * Math.cos(angle);
    child.y = radius * Math.sin(angle) * 0.7;
  });
  if (n === 1) {
    children[0].x = 0;
    children[0].y = 0;
    return;
  }
  for (let iter = 0; iter < 120; iter++) {
    for (let i = 0; i < n; i++) {
      const a = children[i];
      let fx = -a.x * 0.04;
      let fy = -a.y * 0.04;
      for (let j = 0; j < n; j++) {
        if (i === j) continue;
        const b = children[j];
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const minX = (a.w + b.w) / 2 + 10;
        const minY = (a.h + b.h) / 2 + 8;
        // Repulse only while the padded boxes overlap.
        if (Math.abs(dx) < minX && Math.abs(dy) < minY) {
          const pushX = (minX - Math.abs(dx)) * (dx >= 0 ? 1 : -1) * 0.18;
          const pushY = (minY - Math.abs(dy)) * (dy >= 0 ? 1 : -1) * 0.3;
          fx += pushX + (dx === 0 && dy === 0 ? (i - j) * 0.5 : 0);
          fy += pushY;
        }
      }
      a.x += fx;
      a.y += fy;
    }
  }
}

function measure(node: ViewNode, state: ViewState): Sized {
  const [w, h] = baseSize(node);
  const sized: Sized = { node, w, h, children: [], x: 0, y: 0 };
  if (!state.has(node.ref) || node.children.length === 0) return sized;
  sized.children = node.children.map((child) => measure(child, state));
  relax(sized.children);
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const child of sized.children) {
    minX = Math.min(minX, child.x - child.w / 2);
    minY = Math.min(minY, child.y - child.h / 2);
    maxX = Math.max(maxX, child.x + child.w / 2);
    maxY = Math.max(maxY, child.y + child.h / 2);
  }
  for (const child of sized.children) {
    child.x = child.x - minX + PAD;
    child.y = child.y - minY + PAD + HEADER;
  }
  sized.w = Math.max(w, maxX - minX + 2 * PAD);
  sized.h = maxY - minY + 2 * PAD + HEADER;
  return sized;
}

function place(sized: Sized, originX: number, originY: number, rects: Map<string, Rect>): void {
  rects.set(sized.node.ref, { x: originX, y: originY, w: sized.w, h: sized.h });
  for (const child of sized.children) {
    place(child, originX + child.x - child.w / 2, originY + child.y - child.h / 2, rects);
  }
}

/** Flow the subsystem boxes into rows of at most `maxWidth` pixels. */
export function layoutMap(roots: ViewNode[], state: ViewState, maxWidth = 1280): MapLayout {
  const rects = new Map<string, Rect>();
  const sized = roots.map((root) => measure(root, state));
  let x = GAP;
  let y = GAP;
  let rowH = 0;
  let width = 0;
  for (const box of sized) {
    if (x > GAP && x + box.w + GAP > maxWidth) {
      x = GAP;
      y += rowH + GAP;
      rowH = 0;
    }
    place(box, x, y, rects);
    x += box.w + GAP;
    rowH = Math.max(rowH, box.h);
    width = Math.max(width, x);
  }
  return { rects, width: Math.max(width, 320), height: y + rowH + GAP };
}

/** Center of a rect — edge endpoints and label anchors. */
export function center(rect: Rect): [number, number] {
  return [rect.x + rect.w / 2, rect.y + rect.h / 2];
}

/** Point where the segment from `from`'s center to `to`'s center exits `from`. */
export function boundaryPoint(from: Rect, to: Rect): [number, number] {
  const [cx, cy] = center(from);
  const [tx, ty] = center(to);
  const dx = tx - cx;
  const dy = ty - cy;
  if (dx === 0 && dy === 0) return [cx, cy];
  const scaleX = dx !== 0 ? from.w / 2 / Math.abs(dx) : Infinity;
  const scaleY = dy !== 0 ? from.h / 2 / Math.abs(dy) : Infinity;
  const t = Math.min(scaleX, scaleY);
  return [cx + dx * t, cy + dy * t];
}
