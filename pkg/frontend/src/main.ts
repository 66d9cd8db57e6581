/** DOM shell wiring the explorer state to the page. */

import { ApiClient } from './api.js';
import { renderContextPair } from './contextview.js';
import { hoverLabel, renderDotplot } from './dotplot.js';
import { buildViewModels, pickZone, type ZoneViewModel } from './scale.js';
import { DEFAULT_PARAMS, ExplorerState, validateParams } from './state.js';

const PLOT_SIZE = 560;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

export function boot(): void {
  const api = new ApiClient('');
  const state = new ExplorerState(api);

  const corpusSel = byId<HTMLSelectElement>('corpus');
  const docASel = byId<HTMLSelectElement>('doc-a');
  const docBSel = byId<HTMLSelectElement>('doc-b');
  const nwInput = byId<HTMLInputElement>('nw');
  const nhInput = byId<HTMLInputElement>('nh');
  const sminInput = byId<HTMLInputElement>('smin');
  const runButton = byId<HTMLButtonElement>('run');
  const toggleButton = byId<HTMLButtonElement>('toggle-layer');
  const backButton = byId<HTMLButtonElement>('back');
  const prevButton = byId<HTMLButtonElement>('prev-context');
  const nextButton = byId<HTMLButtonElement>('next-context');
  const statusLine = byId<HTMLElement>('status');
  const hoverLine = byId<HTMLElement>('hover');
  const plotSection = byId<HTMLElement>('plot-section');
  const contextSection = byId<HTMLElement>('context-section');
  const contextHost = byId<HTMLElement>('context-host');
  const canvas = byId<HTMLCanvasElement>('dotplot');
  canvas.width = PLOT_SIZE;
  canvas.height = PLOT_SIZE;
  const surface = canvas.getContext('2d');
  if (!surface) throw new Error('canvas unavailable');

  nwInput.value = String(DEFAULT_PARAMS.nw);
  nhInput.value = String(DEFAULT_PARAMS.nh);
  sminInput.value = String(DEFAULT_PARAMS.smin);

  let models: ZoneViewModel[] = [];

  function docTitle(docId: string): string {
    const corpus = state.corpora?.corpora.find((c) => c.corpus_id === state.corpusId);
    return corpus?.documents.find((d) => d.doc_id === docId)?.title ?? docId;
  }

  function readForm() {
    return {
      nw: Number(nwInput.value),
      nh: Number(nhInput.value),
      smin: Number(sminInput.value),
      spliceGap: 'auto' as const,
    };
  }

  function redraw(): void {
    const layer = state.activeLayer();
    if (!layer) {
      renderDotplot(surface!, [], { size: PLOT_SIZE, flatColor: false, aLabel: '', bLabel: '' });
      models = [];
      return;
    }
    const scale = {
      size: PLOT_SIZE,
      aChars: layer.zones.a_char_count,
      bChars: layer.zones.b_char_count,
    };
    models = buildViewModels(layer.zones.zones, scale);
    renderDotplot(
      surface!,
      models,
      {
        size: PLOT_SIZE,
        flatColor: false,
        aLabel: `A: ${docTitle(layer.zones.doc_a)} →`,
        bLabel: `B: ${docTitle(layer.zones.doc_b)} ↓`,
      },
      state.selectedZoneId,
    );
    const which = state.showPrevious ? 'previous' : 'current';
    const p = layer.params;
    statusLine.textContent =
      `${which} layer · n_w=${p.nw} n_h=${p.nh} s_min=${p.smin} · ` +
      `${layer.zones.zones.length} zones, ${layer.blockCount} blocks, ` +
      `${layer.matchCount} matched pairs`;
  }

  function render(): void {
    const fresh = state.corpora?.corpora ?? [];
    if (corpusSel.options.length !== fresh.length) {
      corpusSel.textContent = '';
      for (const corpus of fresh) {
        const opt = document.createElement('option');
        opt.value = corpus.corpus_id;
        opt.textContent = corpus.corpus_id;
        corpusSel.appendChild(opt);
      }
    }
    corpusSel.value = state.corpusId;
    const docs =
      fresh.find((c) => c.corpus_id === state.corpusId)?.documents ?? [];
    for (const sel of [docASel, docBSel]) {
      if (sel.options.length !== docs.length) {
        sel.textContent = '';
        for (const d of docs) {
          const opt = document.createElement('option');
          opt.value = d.doc_id;
          opt.textContent = d.title;
          sel.appendChild(opt);
        }
      }
    }
    docASel.value = state.docA;
    docBSel.value = state.docB;

    plotSection.hidden = state.view !== 'dotplot';
    contextSection.hidden = state.view !== 'context';
    toggleButton.disabled = !state.previous;
    runButton.disabled = state.busy;

    if (state.error) {
      statusLine.textContent = `error: ${state.error}`;
    } else if (state.staleNotice) {
      statusLine.textContent =
        'corpus changed since this layer was computed — re-run detection';
    } else if (state.busy) {
      statusLine.textContent = 'working…';
    }

    if (state.view === 'dotplot') {
      redraw();
    } else {
      const model = state.contexts[state.contextPage];
      if (model) {
        const layer = state.activeLayer()!;
        renderContextPair(document, contextHost, model, state.contextPage,
          state.contexts.length, {
            a: docTitle(layer.zones.doc_a),
            b: docTitle(layer.zones.doc_b),
          });
      }
      prevButton.disabled = state.contextPage === 0;
      nextButton.disabled = state.contextPage >= state.contexts.length - 1;
    }
  }

  state.onChange(render);

  corpusSel.addEventListener('change', () => {
    state.corpusId = corpusSel.value;
    void state.loadCorpora();
  });
  docASel.addEventListener('change', () => (state.docA = docASel.value));
  docBSel.addEventListener('change', () => (state.docB = docBSel.value));

  runButton.addEventListener('click', () => {
    const form = readForm();
    const problem = validateParams(form);
    if (problem) {
      statusLine.textContent = `error: ${problem}`;
      return; // invalid forms never reach the API
    }
    state.form = form;
    void state.runDetection(form).catch(() => undefined);
  });

  toggleButton.addEventListener('click', () => state.toggleComparison());
  backButton.addEventListener('click', () => state.back());
  prevButton.addEventListener('click', () => state.prevContext());
  nextButton.addEventListener('click', () => state.nextContext());

  canvas.addEventListener('mousemove', (event) => {
    const rect = canvas.getBoundingClientRect();
    const zone = pickZone(models, event.clientX - rect.left, event.clientY - rect.top);
    hoverLine.textContent = zone ? hoverLabel(zone) : '';
    canvas.style.cursor = zone ? 'pointer' : 'default';
  });

  canvas.addEventListener('click', (event) => {
    const rect = canvas.getBoundingClientRect();
    const zone = pickZone(models, event.clientX - rect.left, event.clientY - rect.top);
    if (zone) void state.selectZone(zone.zoneId);
  });

  void state.loadCorpora();
}

if (typeof document !== 'undefined' && document.getElementById('dotplot')) {
  boot();
}
