/** Payload shapes of the detection API (schema_version 1). */

export interface DocumentInfo {
  doc_id: string;
  title: string;
  author: string;
  char_count: number;
}

export interface CorpusInfo {
  corpus_id: string;
  manifest_digest: string;
  documents: DocumentInfo[];
}

export interface CorporaPayload {
  schema_version: number;
  corpora: CorpusInfo[];
}

export interface JobParams {
  nw: number;
  nh: number;
  smin: number;
  splice_gap?: number | 'auto';
}

export interface JobPayload {
  schema_version: number;
  job_id: string;
  corpus: string;
  a: string;
  b: string;
  params: { nw: number; nh: number; smin: number; splice_gap: number };
  status: 'pending' | 'running' | 'done' | 'failed';
  report_id?: string;
  zones?: number;
  blocks?: number;
  matches?: number;
  error?: string;
}

export type Span = [number, number];

export interface ZonePayload {
  zone_id: number;
  a_span: Span;
  b_span: Span;
  block_ids: string[];
  density: number;
}

export interface ZonesPayload {
  schema_version: number;
  report_id: string;
  doc_a: string;
  doc_b: string;
  a_char_count: number;
  b_char_count: number;
  zones: ZonePayload[];
}

export interface ContextPayload {
  schema_version: number;
  block_id: string;
  doc_a: string;
  doc_b: string;
  strong_count: number;
  score: number;
  a_span: Span;
  b_span: Span;
  a_excerpt: string;
  b_excerpt: string;
  a_offset: number;
  b_offset: number;
  a_highlights: Span[];
  b_highlights: Span[];
}

export interface DocSlicePayload {
  schema_version: number;
  doc_id: string;
  title: string;
  char_count: number;
  from: number;
  to: number;
  text: string;
}
