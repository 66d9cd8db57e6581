/**
 * Side-by-side context panes with synchronized highlight colors.
 * Highlights render exactly over the spans the API returned.
 */

import type { ContextViewModel, Segment } from './highlight.js';

function pane(doc: Document, title: string, segments: Segment[]): HTMLElement {
  const el = doc.createElement('div');
  el.className = 'context-pane';
  const head = doc.createElement('h3');
  head.textContent = title;
  el.appendChild(head);
  const body = doc.createElement('p');
  for (const segment of segments) {
    if (segment.marked) {
      const mark = doc.createElement('mark');
      mark.textContent = segment.text;
      body.appendChild(mark);
    } else {
      body.appendChild(doc.createTextNode(segment.text));
    }
  }
  el.appendChild(body);
  return el;
}

export function renderContextPair(
  doc: Document,
  container: HTMLElement,
  model: ContextViewModel,
  page: number,
  total: number,
  titles: { a: string; b: string },
): void {
  container.textContent = '';
  const meta = doc.createElement('div');
  meta.className = 'context-meta';
  meta.textContent =
    `block ${model.blockId} · strong ${model.strongCount} · score ${model.score}` +
    (total > 1 ? ` · ${page + 1}/${total}` : '');
  container.appendChild(meta);
  const row = doc.createElement('div');
  row.className = 'context-row';
  row.appendChild(pane(doc, titles.a, model.aSegments));
  row.appendChild(pane(doc, titles.b, model.bSegments));
  container.appendChild(row);
}
