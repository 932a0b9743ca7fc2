/**
 * Viewer entry point: loads a model document (served model directory, URL
 * parameter, or local file), keeps the expansion/search state in the URL
 * hash, and redraws the map on every interaction. The document itself is
 * immutable after load.
 */
import type { Model } from './types.js';
import { validateModel } from './validate.js';
import type { ViewTree } from './tree.js';
import { buildTree } from './tree.js';
import type { ViewState } from './viewstate.js';
import { emptyState, toggleExpand, validExpandedRefs } from './viewstate.js';
import { matchIds, searchFiles } from './search.js';
import { inspectFile } from './inspect.js';
import { emergentView } from './emergent.js';
import { decodeHash, encodeHash } from './hashstate.js';
import type { DisplayMode } from './render.js';
import {
  renderEmergentOverlay,
  renderErrorPanel,
  renderMap,
  renderNeighborPanel,
  renderSearchPanel,
  renderStatus,
} from './render.js';

const EDITOR_KEY = 'sydra-editor-template';

interface App {
  model: Model | null;
  tree: ViewTree | null;
  state: ViewState;
  search: string;
  mode: DisplayMode;
  selected: number | null;
}

const app: App = {
  model: null,
  tree: null,
  state: emptyState(),
  search: '',
  mode: 'clustered',
  selected: null,
};

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function editorTemplate(): string {
  return localStorage.getItem(EDITOR_KEY) ?? '';
}

function syncHash(): void {
  const hash = encodeHash({ expanded: [...app.state].sort(), search: app.search });
  history.replaceState(null, '', hash === '' ? location.pathname + location.search : hash);
}

function redraw(): void {
  const svg = el<HTMLElement>('map');
  const panel = el<HTMLElement>('panel');
  if (!app.model || !app.tree) return;
  const rendered = renderMap(app.tree, app.state, {
    mode: app.mode,
    maxWidth: Math.max(480, svg.parentElement?.clientWidth ?? 1280),
    highlights: matchIds(app.model, app.search),
  });
  svg.setAttribute('viewBox', `0 0 ${rendered.width} ${rendered.height}`);
  svg.setAttribute('width', String(rendered.width));
  svg.setAttribute('height', String(rendered.height));
  svg.innerHTML = rendered.svg;
  if (app.selected !== null) {
    panel.innerHTML = renderNeighborPanel(inspectFile(app.model, app.selected), editorTemplate());
  } else {
    panel.innerHTML = renderSearchPanel(searchFiles(app.model, app.search), app.search);
  }
  el('status').textContent = renderStatus(app.model);
}

function showErrors(errors: string[]): void {
  app.model = null;
  app.tree = null;
  el('map').innerHTML = '';
  el('panel').innerHTML = renderErrorPanel(errors);
  el('status').textContent = 'no model loaded';
  el<HTMLButtonElement>('emergent').disabled = true;
}

function adoptDocument(doc: unknown): void {
  const errors = validateModel(doc);
  if (errors.length > 0) {
    showErrors(errors);
    return;
  }
  app.model = doc as Model;
  app.tree = buildTree(app.model);
  app.selected = null;
  const fromHash = decodeHash(location.hash);
  app.state = validExpandedRefs(app.tree, fromHash.expanded);
  app.search = fromHash.search;
  el<HTMLInputElement>('search').value = app.search;
  const emergent = el<HTMLButtonElement>('emergent');
  emergent.disabled = emergentView(app.model) === null;
  emergent.title = emergent.disabled
    ? 'this document has no aggregated corpus data'
    : 'show the emergent reference architecture';
  el('overlay').hidden = true;
  redraw();
}

async function fetchJson(url: string): Promise<unknown> {
  const response = await fetch(url);
  if (!response.ok) throw new Error(`${url}: HTTP ${response.status}`);
  return response.json();
}

async function loadFromUrl(url: string): Promise<void> {
  try {
    adoptDocument(await fetchJson(url));
  } catch (err) {
    showErrors([String(err)]);
  }
}

async function populateModelList(): Promise<void> {
  const select = el<HTMLSelectElement>('models');
  try {
    const names = (await fetchJson('/api/models')) as { models: string[] };
    for (const name of names.models) {
      const option = document.createElement('option');
      option.value = name;
      option.textContent = name;
      select.appendChild(option);
    }
    select.hidden = names.models.length === 0;
    if (!location.search.includes('model=') && names.models.length > 0) {
      select.value = names.models[0];
      await loadFromUrl(`/api/models/${encodeURIComponent(names.models[0])}`);
    }
  } catch {
    select.hidden = true; // not running behind the API server
  }
}

function wireEvents(): void {
  el('map').addEventListener('click', (event) => {
    const target = event.target as Element;
    const fileHit = target.closest('[data-file-id]');
    if (fileHit && app.model) {
      app.selected = Number(fileHit.getAttribute('data-file-id'));
      redraw();
      return;
    }
    const refHit = target.closest('[data-ref]');
    if (refHit && app.tree) {
      app.state = toggleExpand(app.tree, app.state, refHit.getAttribute('data-ref') as string);
      syncHash();
      redraw();
    }
  });
  el('panel').addEventListener('click', (event) => {
    const row = (event.target as Element).closest('[data-file-id]');
    if (row && app.model) {
      app.selected = Number(row.getAttribute('data-file-id'));
      redraw();
    }
  });
  el<HTMLInputElement>('search').addEventListener('input', (event) => {
    app.search = (event.target as HTMLInputElement).value;
    app.selected = null;
    syncHash();
    redraw();
  });
  el<HTMLInputElement>('mode').addEventListener('change', (event) => {
    app.mode = (event.target as HTMLInputElement).checked ? 'flat' : 'clustered';
    redraw();
  });
  el<HTMLButtonElement>('emergent').addEventListener('click', () => {
    if (!app.model) return;
    const diagram = emergentView(app.model);
    if (!diagram) return;
    const overlay = el('overlay');
    overlay.innerHTML = `<div class="modal">${renderEmergentOverlay(diagram)}<p>click to close</p></div>`;
    overlay.hidden = false;
  });
  el('overlay').addEventListener('click', () => {
    el('overlay').hidden = true;
  });
  const editor = el<HTMLInputElement>('editor-template');
  editor.value = editorTemplate();
  editor.addEventListener('change', () => {
    localStorage.setItem(EDITOR_KEY, editor.value);
    redraw();
  });
  el<HTMLInputElement>('file').addEventListener('change', (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    file.text().then((text) => {
      try {
        adoptDocument(JSON.parse(text));
      } catch (err) {
        showErrors([`not valid JSON: ${String(err)}`]);
      }
    });
  });
  el<HTMLSelectElement>('models').addEventListener('change', (event) => {
    const name = (event.target as HTMLSelectElement).value;
    if (name !== '') void loadFromUrl(`/api/models/${encodeURIComponent(name)}`);
  });
  window.addEventListener('hashchange', () => {
    if (!app.tree) return;
    const fromHash = decodeHash(location.hash);
    app.state = validExpandedRefs(app.tree, fromHash.expanded);
    app.search = fromHash.search;
    el<HTMLInputElement>('search').value = app.search;
    redraw();
  });
}

async function boot(): Promise<void> {
  wireEvents();
  const params = new URLSearchParams(location.search);
  const modelUrl = params.get('model');
  await populateModelList();
  if (modelUrl) await loadFromUrl(modelUrl);
}

void boot();
