/**
 * Shareable view state in the URL hash: expanded node refs plus the search
 * term, e.g. `#e=sub%3AAUD,dir%3AAUD%3Aservers%2Faudio&q=camera`.
 * Refs are URI-encoded individually so the comma separator stays unambiguous.
 */

export interface HashState {
  expanded: string[];
  search: string;
}

export function emptyHashState(): HashState {
  return { expanded: [], search: '' };
}

/** Encode a view state; returns '' when there is nothing to share. */
export function encodeHash(state: HashState): string {
  const parts: string[] = [];
  if (state.expanded.length > 0) {
    parts.push(`e=${state.expanded.map(encodeURIComponent).join(',')}`);
  }
  if (state.search !== '') {
    parts.push(`q=${encodeURIComponent(state.search)}`);
  }
  return parts.length > 0 ? `#${parts.join('&')}` : '';
}

/** Decode a location.hash value; malformed parts are dropped, never fatal. */
export function decodeHash(hash: string): HashState {
  const state = emptyHashState();
  const body = hash.startsWith('#') ? hash.slice(1) : hash;
  if (body === '') return state;
  for (const part of body.split('&')) {
    const eq = part.indexOf('=');
    if (eq < 0) continue;
    const key = part.slice(0, eq);
    const value = part.slice(eq + 1);
    try {
      if (key === 'e' && value !== '') {
        state.expanded = value.split(',').map(decodeURIComponent);
      } else if (key === 'q') {
        state.search = decodeURIComponent(value);
      }
    } catch {
      // malformed percent-encoding: ignore the part
    }
  }
  return state;
}
