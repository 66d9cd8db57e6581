/**
 * In-memory API double serving frozen payloads captured from the real
 * backend (tools/gen_fixtures.py). Implements the fetch signature, so the
 * client under test runs headlessly and unmodified.
 *
 * Job submissions are matched by (a, b, params); each job first reports
 * running once, then done, which exercises the polling path.
 */

import type { FetchLike } from '../src/api.js';
import type { JobParams } from '../src/types.js';

import rawFixtures from './fixtures/api_fixtures.json' assert { type: 'json' };

interface JobSpec {
  request: { a: string; b: string; params: JobParams };
  job: Record<string, unknown>;
  zones: Record<string, unknown>;
  contexts: Record<string, Record<string, unknown>>;
}

export interface Fixtures {
  corpora: Record<string, unknown>;
  corporaChanged: Record<string, unknown>;
  docTexts: Record<string, { text: string; [k: string]: unknown }>;
  jobs: JobSpec[];
  pairs: Record<string, [string, string]>;
}

export const fixtures = rawFixtures as unknown as Fixtures;

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

function notFound(detail: string): Response {
  return jsonResponse({ detail }, 404);
}

function paramsKey(a: string, b: string, params: JobParams): string {
  const gap = params.splice_gap === undefined ? 'auto' : String(params.splice_gap);
  const [lo, hi] = a < b ? [a, b] : [b, a];
  return `${lo}|${hi}|${params.nw}|${params.nh}|${params.smin}|${gap}`;
}

export class FixtureServer {
  requestLog: string[] = [];
  stale = false; // serve the changed corpora listing
  private jobSeq = 0;
  private live = new Map<string, { spec: JobSpec; polls: number }>();
  private specs = new Map<string, JobSpec>();

  constructor(private data: Fixtures = fixtures) {
    for (const spec of data.jobs) {
      const { a, b, params } = spec.request;
      this.specs.set(paramsKey(a, b, params), spec);
    }
  }

  fetch: FetchLike = async (input, init) => {
    const url = new URL(input, 'http://fixture');
    const method = (init?.method ?? 'GET').toUpperCase();
    this.requestLog.push(`${method} ${url.pathname}${url.search}`);

    if (method === 'GET' && url.pathname === '/api/corpora') {
      return jsonResponse(this.stale ? this.data.corporaChanged : this.data.corpora);
    }

    const docMatch = url.pathname.match(/^\/api\/corpora\/([^/]+)\/docs\/([^/]+)$/);
    if (method === 'GET' && docMatch) {
      const doc = this.data.docTexts[docMatch[2]];
      if (!doc) return notFound(`unknown document ${docMatch[2]}`);
      const from = Number(url.searchParams.get('from') ?? 0);
      const to = Number(url.searchParams.get('to') ?? doc.text.length);
      return jsonResponse({ ...doc, from, to, text: doc.text.slice(from, to) });
    }

    if (method === 'POST' && url.pathname === '/api/jobs') {
      const body = JSON.parse(String(init?.body ?? '{}'));
      const params: JobParams = body.params ?? { nw: 3, nh: 2, smin: 4 };
      if (params.nw < 1) {
        return jsonResponse({ detail: 'window size must be >= 1' }, 422);
      }
      const spec = this.specs.get(paramsKey(body.a, body.b, params));
      if (!spec) return notFound('no fixture for this job request');
      this.jobSeq += 1;
      const jobId = `job-${this.jobSeq}`;
      this.live.set(jobId, { spec, polls: 0 });
      return jsonResponse(
        { ...spec.job, job_id: jobId, status: 'pending', report_id: undefined },
        202,
      );
    }

    const jobMatch = url.pathname.match(/^\/api\/jobs\/([^/]+)$/);
    if (method === 'GET' && jobMatch) {
      const entry = this.live.get(jobMatch[1]);
      if (!entry) return notFound(`unknown job ${jobMatch[1]}`);
      entry.polls += 1;
      if (entry.polls === 1) {
        return jsonResponse({ ...entry.spec.job, job_id: jobMatch[1], status: 'running' });
      }
      return jsonResponse({ ...entry.spec.job, job_id: jobMatch[1] });
    }

    const zonesMatch = url.pathname.match(/^\/api\/reports\/([^/]+)\/zones$/);
    if (method === 'GET' && zonesMatch) {
      const spec = this.data.jobs.find((j) => j.job.report_id === zonesMatch[1]);
      if (!spec) return notFound(`unknown report ${zonesMatch[1]}`);
      return jsonResponse(spec.zones);
    }

    const ctxMatch = url.pathname.match(/^\/api\/blocks\/(.+)\/context$/);
    if (method === 'GET' && ctxMatch) {
      const blockId = decodeURIComponent(ctxMatch[1]);
      for (const spec of this.data.jobs) {
        if (blockId in spec.contexts) return jsonResponse(spec.contexts[blockId]);
      }
      return notFound(`unknown block ${blockId}`);
    }

    return notFound(`no route for ${method} ${url.pathname}`);
  };
}

export function jobSpecFor(a: string, b: string, params: JobParams): JobSpec {
  const spec = fixtures.jobs.find(
    (j) => paramsKey(j.request.a, j.request.b, j.request.params) === paramsKey(a, b, params),
  );
  if (!spec) throw new Error('missing fixture job');
  return spec;
}
