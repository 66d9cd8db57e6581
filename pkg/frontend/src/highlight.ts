/**
 * Turn an excerpt plus highlight spans into render segments.
 *
 * Segments reproduce the excerpt exactly: concatenating their text equals
 * the payload string byte for byte, with marked runs exactly where the API
 * said the matched tokens sit.
 */

import type { ContextPayload, Span } from './types.js';

export interface Segment {
  text: string;
  marked: boolean;
}

export function segmentExcerpt(excerpt: string, highlights: Span[]): Segment[] {
  const segments: Segment[] = [];
  let pos = 0;
  for (const [start, end] of highlights) {
    if (start > pos) segments.push({ text: excerpt.slice(pos, start), marked: false });
    segments.push({ text: excerpt.slice(start, end), marked: true });
    pos = end;
  }
  if (pos < excerpt.length) segments.push({ text: excerpt.slice(pos), marked: false });
  return segments;
}

export function reassemble(segments: Segment[]): string {
  return segments.map((s) => s.text).join('');
}

export function markedTexts(segments: Segment[]): string[] {
  return segments.filter((s) => s.marked).map((s) => s.text);
}

export interface ContextViewModel {
  blockId: string;
  strongCount: number;
  score: number;
  aSpan: Span;
  bSpan: Span;
  aSegments: Segment[];
  bSegments: Segment[];
}

export function toContextViewModel(payload: ContextPayload): ContextViewModel {
  return {
    blockId: payload.block_id,
    strongCount: payload.strong_count,
    score: payload.score,
    aSpan: payload.a_span,
    bSpan: payload.b_span,
    aSegments: segmentExcerpt(payload.a_excerpt, payload.a_highlights),
    bSegments: segmentExcerpt(payload.b_excerpt, payload.b_highlights),
  };
}
