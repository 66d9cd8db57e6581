/**
 * Explorer state: corpus/document selection, detection layers, the
 * two-level dot-plot -> context navigation, and parameter retuning.
 *
 * Retuning keeps the previous zone layer around so the effect of a
 * parameter change can be toggled visually. Every displayed number is
 * traceable to an API payload; this module never computes detection
 * results itself.
 */

import { ApiClient } from './api.js';
import type { ContextViewModel } from './highlight.js';
import { toContextViewModel } from './highlight.js';
import type { CorporaPayload, JobParams, JobPayload, ZonesPayload } from './types.js';

export interface ParamsForm {
  nw: number;
  nh: number;
  smin: number;
  spliceGap: number | 'auto';
}

export const DEFAULT_PARAMS: ParamsForm = { nw: 3, nh: 2, smin: 4, spliceGap: 'auto' };

export interface Layer {
  params: JobPayload['params'];
  reportId: string;
  zones: ZonesPayload;
  blockCount: number;
  matchCount: number;
  corpusDigest: string;
}

export type ViewName = 'dotplot' | 'context';

/** Validation mirrors the CLI rules; invalid forms never reach the API. */
export function validateParams(form: ParamsForm): string | null {
  if (!Number.isInteger(form.nw) || form.nw < 1) return 'window size must be >= 1';
  if (!Number.isInteger(form.nh) || form.nh < 0) return 'hole count must be >= 0';
  if (!Number.isInteger(form.smin) || form.smin < 0) {
    return 'strong-word threshold must be >= 0';
  }
  if (
    form.spliceGap !== 'auto' &&
    (!Number.isInteger(form.spliceGap) || form.spliceGap < 0)
  ) {
    return 'splice gap must be >= 0 or "auto"';
  }
  return null;
}

function toJobParams(form: ParamsForm): JobParams {
  return { nw: form.nw, nh: form.nh, smin: form.smin, splice_gap: form.spliceGap };
}

export class ExplorerState {
  corpora: CorporaPayload | null = null;
  corpusId = '';
  docA = '';
  docB = '';
  form: ParamsForm = { ...DEFAULT_PARAMS };

  current: Layer | null = null;
  previous: Layer | null = null;
  showPrevious = false;

  view: ViewName = 'dotplot';
  selectedZoneId: number | null = null;
  contexts: ContextViewModel[] = [];
  contextPage = 0;

  busy = false;
  error: string | null = null;
  staleNotice = false;

  private listeners: Array<() => void> = [];

  constructor(private api: ApiClient, private pollIntervalMs = 120) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  async loadCorpora(): Promise<void> {
    this.corpora = await this.api.listCorpora();
    const first = this.corpora.corpora[0];
    if (first) {
      this.corpusId = this.corpusId || first.corpus_id;
      if (!this.docA && first.documents.length >= 2) {
        this.docA = first.documents[0].doc_id;
        this.docB = first.documents[1].doc_id;
      }
    }
    this.emit();
  }

  corpusDigest(): string {
    const corpus = this.corpora?.corpora.find((c) => c.corpus_id === this.corpusId);
    return corpus?.manifest_digest ?? '';
  }

  /** The zone layer the dot-plot currently displays. */
  activeLayer(): Layer | null {
    return this.showPrevious ? this.previous : this.current;
  }

  /**
   * Submit a detection job for the selected pair and swap the new zone
   * layer in when it completes; the replaced layer stays for comparison.
   */
  async runDetection(form: ParamsForm = this.form): Promise<void> {
    const problem = validateParams(form);
    if (problem) {
      this.error = problem;
      this.emit();
      throw new Error(problem);
    }
    this.busy = true;
    this.error = null;
    this.emit();
    try {
      const submitted = await this.api.submitJob(
        this.corpusId,
        this.docA,
        this.docB,
        toJobParams(form),
      );
      const done = await this.api.pollJob(submitted.job_id, this.pollIntervalMs);
      const zones = await this.api.zones(done.report_id!);
      this.previous = this.current;
      this.current = {
        params: done.params,
        reportId: done.report_id!,
        zones,
        blockCount: done.blocks ?? 0,
        matchCount: done.matches ?? 0,
        corpusDigest: this.corpusDigest(),
      };
      this.showPrevious = false;
      this.view = 'dotplot';
      this.selectedZoneId = null;
      this.contexts = [];
      this.staleNotice = false;
    } catch (err) {
      this.error = err instanceof Error ? err.message : String(err);
      throw err;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  /**
   * Drill into a zone: fetch every block's context and switch to the
   * side-by-side view. Refuses with a re-run prompt when the corpus has
   * changed since the layer was computed.
   */
  async selectZone(zoneId: number): Promise<void> {
    const layer = this.activeLayer();
    if (!layer) return;
    const zone = layer.zones.zones.find((z) => z.zone_id === zoneId);
    if (!zone || zone.block_ids.length === 0) return;

    await this.loadCorpora();
    if (this.corpusDigest() !== layer.corpusDigest) {
      this.staleNotice = true;
      this.emit();
      return;
    }

    this.busy = true;
    this.emit();
    try {
      const payloads = [];
      for (const blockId of zone.block_ids) {
        payloads.push(await this.api.blockContext(blockId));
      }
      this.contexts = payloads.map(toContextViewModel);
      this.contextPage = 0;
      this.selectedZoneId = zoneId;
      this.view = 'context';
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  /** Back to the dot-plot; zone layers and selection state survive. */
  back(): void {
    this.view = 'dotplot';
    this.emit();
  }

  nextContext(): void {
    if (this.contextPage < this.contexts.length - 1) {
      this.contextPage += 1;
      this.emit();
    }
  }

  prevContext(): void {
    if (this.contextPage > 0) {
      this.contextPage -= 1;
      this.emit();
    }
  }

  /** Toggle between the current and previous parameter layers. */
  toggleComparison(): void {
    if (this.previous) {
      this.showPrevious = !this.showPrevious;
      this.emit();
    }
  }
}
