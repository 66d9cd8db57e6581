/**
 * Thin client over the detection API. Every number the UI shows comes out
 * of these payloads; no detection logic lives client-side.
 */

import type {
  ContextPayload,
  CorporaPayload,
  DocSlicePayload,
  JobParams,
  JobPayload,
  ZonesPayload,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private baseUrl: string = '',
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = await response.json();
        if (body && typeof body.detail === 'string') detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  listCorpora(): Promise<CorporaPayload> {
    return this.request('/api/corpora');
  }

  docSlice(corpus: string, docId: string, from?: number, to?: number): Promise<DocSlicePayload> {
    const query = new URLSearchParams();
    if (from !== undefined) query.set('from', String(from));
    if (to !== undefined) query.set('to', String(to));
    const suffix = query.toString() ? `?${query}` : '';
    return this.request(`/api/corpora/${corpus}/docs/${docId}${suffix}`);
  }

  submitJob(corpus: string, a: string, b: string, params: JobParams): Promise<JobPayload> {
    return this.request('/api/jobs', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ corpus, a, b, params }),
    });
  }

  jobStatus(jobId: string): Promise<JobPayload> {
    return this.request(`/api/jobs/${jobId}`);
  }

  /** Poll until the job reaches a terminal state; resolves on done. */
  async pollJob(
    jobId: string,
    intervalMs = 250,
    sleep: (ms: number) => Promise<void> = (ms) => new Promise((r) => setTimeout(r, ms)),
  ): Promise<JobPayload> {
    for (;;) {
      const job = await this.jobStatus(jobId);
      if (job.status === 'done') return job;
      if (job.status === 'failed') {
        throw new ApiError(500, job.error ?? 'detection job failed');
      }
      await sleep(intervalMs);
    }
  }

  zones(reportId: string): Promise<ZonesPayload> {
    return this.request(`/api/reports/${reportId}/zones`);
  }

  blockContext(blockId: string, radius = 200): Promise<ContextPayload> {
    return this.request(`/api/blocks/${blockId}/context?radius=${radius}`);
  }
}
