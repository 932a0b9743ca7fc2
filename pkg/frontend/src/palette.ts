/**
 * Fixed 17-entry color palette keyed by subsystem tag.
 *
 * Colors are stable across sessions and models so a subsystem keeps its hue
 * everywhere it appears (boxes, edges, search groups, emergent tiers).
 */
import type { Tag } from './types.js';

export const PALETTE: Record<Tag, string> = {
  AUD: '#e6794a',
  COR: '#4a7de6',
  DEB: '#8a8a8a',
  EDI: '#9b59b6',
  FES: '#e64a8a',
  GMP: '#2eaf64',
  HID: '#b58900',
  LLR: '#d33682',
  OMP: '#268bd2',
  PHY: '#cb4b16',
  PLA: '#6c71c4',
  RES: '#379c8a',
  SDK: '#7a8a5a',
  SGC: '#c49a2e',
  SKA: '#d36ac2',
  UNK: '#555555',
  VFX: '#2aa1b3',
};

export function colorFor(tag: Tag): string {
  return PALETTE[tag];
}
