import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { reassemble } from '../src/highlight.js';
import { ExplorerState, validateParams } from '../src/state.js';
import type { ContextPayload } from '../src/types.js';
import { FixtureServer, fixtures, jobSpecFor } from './fixture_server.js';

const DEFAULTS = { nw: 3, nh: 2, smin: 4, spliceGap: 'auto' as const };

function makeState(server: FixtureServer): ExplorerState {
  return new ExplorerState(new ApiClient('', server.fetch), 0);
}

let server: FixtureServer;
let state: ExplorerState;

beforeEach(async () => {
  server = new FixtureServer();
  state = makeState(server);
  await state.loadCorpora();
});

describe('parameter validation', () => {
  it('rejects invalid forms without sending a request', async () => {
    const before = server.requestLog.length;
    await expect(
      state.runDetection({ ...DEFAULTS, nw: 0 }),
    ).rejects.toThrow('window size must be >= 1');
    expect(server.requestLog.length).toBe(before);
    expect(validateParams({ ...DEFAULTS, nh: -1 })).toMatch(/hole count/);
    expect(validateParams({ ...DEFAULTS, smin: -2 })).toMatch(/strong-word/);
    expect(validateParams(DEFAULTS)).toBeNull();
  });
});

describe('detection flow', () => {
  it('submits, polls through running, and installs the zone layer', async () => {
    [state.docA, state.docB] = fixtures.pairs.verse;
    await state.runDetection(DEFAULTS);
    const layer = state.activeLayer();
    expect(layer).not.toBeNull();
    const spec = jobSpecFor(...fixtures.pairs.verse, {
      nw: 3, nh: 2, smin: 4, splice_gap: 'auto',
    });
    expect(layer!.zones.zones).toHaveLength(
      (spec.zones as { zones: unknown[] }).zones.length,
    );
    expect(server.requestLog.filter((r) => r.startsWith('GET /api/jobs/')).length)
      .toBeGreaterThanOrEqual(2); // at least one running poll, then done
  });

  it('raising s_min never increases the on-screen zone count', async () => {
    [state.docA, state.docB] = fixtures.pairs.stanza;
    const counts: number[] = [];
    for (const smin of [4, 7, 9]) {
      await state.runDetection({ ...DEFAULTS, smin });
      counts.push(state.activeLayer()!.zones.zones.length);
    }
    expect(counts[1]).toBeLessThanOrEqual(counts[0]);
    expect(counts[2]).toBeLessThanOrEqual(counts[1]);
    expect(counts[2]).toBeLessThan(counts[0]); // fixtures guarantee a real drop
  });

  it('raising n_h at fixed n_w never loses matched pairs', async () => {
    [state.docA, state.docB] = fixtures.pairs.maxim;
    await state.runDetection({ ...DEFAULTS, nh: 0, smin: 0 });
    const low = state.activeLayer()!.matchCount;
    await state.runDetection({ ...DEFAULTS, nh: 2, smin: 0 });
    const high = state.activeLayer()!.matchCount;
    expect(high).toBeGreaterThanOrEqual(low);
  });

  it('keeps the previous layer for A/B comparison', async () => {
    [state.docA, state.docB] = fixtures.pairs.stanza;
    await state.runDetection({ ...DEFAULTS, smin: 4 });
    const first = state.activeLayer();
    await state.runDetection({ ...DEFAULTS, smin: 9 });
    const second = state.activeLayer();
    expect(second).not.toBe(first);
    state.toggleComparison();
    expect(state.activeLayer()).toBe(first);
    state.toggleComparison();
    expect(state.activeLayer()).toBe(second);
  });
});

describe('drill-down', () => {
  it('fetches one context per block and byte-matches the payload', async () => {
    [state.docA, state.docB] = fixtures.pairs.verse;
    await state.runDetection(DEFAULTS);
    const zone = state.activeLayer()!.zones.zones[0];
    await state.selectZone(zone.zone_id);
    expect(state.view).toBe('context');
    expect(state.contexts).toHaveLength(zone.block_ids.length);

    const spec = jobSpecFor(...fixtures.pairs.verse, {
      nw: 3, nh: 2, smin: 4, splice_gap: 'auto',
    });
    for (const model of state.contexts) {
      const payload = spec.contexts[model.blockId] as unknown as ContextPayload;
      expect(reassemble(model.aSegments)).toBe(payload.a_excerpt);
      expect(reassemble(model.bSegments)).toBe(payload.b_excerpt);
      const marked = model.aSegments.filter((s) => s.marked).map((s) => s.text);
      expect(marked).toEqual(
        payload.a_highlights.map(([s, e]) => payload.a_excerpt.slice(s, e)),
      );
    }
  });

  it('paginates multi-block zones and preserves dot-plot state on back', async () => {
    [state.docA, state.docB] = fixtures.pairs.balzac;
    await state.runDetection(DEFAULTS);
    const layerBefore = state.activeLayer();
    const zone = state.activeLayer()!.zones.zones[0];
    expect(zone.block_ids.length).toBeGreaterThan(1);
    await state.selectZone(zone.zone_id);
    expect(state.contexts.length).toBe(zone.block_ids.length);
    expect(state.contextPage).toBe(0);
    state.nextContext();
    expect(state.contextPage).toBe(1);
    state.prevContext();
    expect(state.contextPage).toBe(0);
    state.back();
    expect(state.view).toBe('dotplot');
    expect(state.activeLayer()).toBe(layerBefore);
    expect(state.selectedZoneId).toBe(zone.zone_id);
  });

  it('prompts to re-run instead of drilling into a stale layer', async () => {
    [state.docA, state.docB] = fixtures.pairs.verse;
    await state.runDetection(DEFAULTS);
    server.stale = true; // corpus manifest changes under the explorer
    const zone = state.activeLayer()!.zones.zones[0];
    await state.selectZone(zone.zone_id);
    expect(state.staleNotice).toBe(true);
    expect(state.view).toBe('dotplot');
    expect(state.contexts).toHaveLength(0);
  });
});
