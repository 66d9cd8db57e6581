import { describe, expect, it } from 'vitest';

import { hoverLabel, renderDotplot, type DrawSurface } from '../src/dotplot.js';
import { buildViewModels } from '../src/scale.js';
import type { ZonesPayload } from '../src/types.js';
import { fixtures, jobSpecFor } from './fixture_server.js';

class RecordingSurface implements DrawSurface {
  fillStyle: string | CanvasGradient | CanvasPattern = '';
  strokeStyle: string | CanvasGradient | CanvasPattern = '';
  globalAlpha = 1;
  font = '';
  fillRects: Array<[number, number, number, number]> = [];
  strokeRects: Array<[number, number, number, number]> = [];
  texts: string[] = [];

  clearRect(): void {}
  fillRect(x: number, y: number, w: number, h: number): void {
    this.fillRects.push([x, y, w, h]);
  }
  strokeRect(x: number, y: number, w: number, h: number): void {
    this.strokeRects.push([x, y, w, h]);
  }
  fillText(text: string): void {
    this.texts.push(text);
  }
}

function zonesFor(pair: [string, string], smin: number): ZonesPayload {
  return jobSpecFor(pair[0], pair[1], {
    nw: 3, nh: 2, smin, splice_gap: 'auto',
  }).zones as unknown as ZonesPayload;
}

describe('dot-plot rendering', () => {
  it('draws exactly one filled rectangle per report zone', () => {
    for (const [pair, smin] of [
      [fixtures.pairs.verse, 4],
      [fixtures.pairs.balzac, 4],
      [fixtures.pairs.stanza, 4],
      [fixtures.pairs.stanza, 7],
    ] as Array<[[string, string], number]>) {
      const zones = zonesFor(pair, smin);
      const models = buildViewModels(zones.zones, {
        size: 560, aChars: zones.a_char_count, bChars: zones.b_char_count,
      });
      const surface = new RecordingSurface();
      const drawn = renderDotplot(surface, models, {
        size: 560, flatColor: false, aLabel: 'A', bLabel: 'B',
      });
      expect(drawn).toBe(zones.zones.length);
      expect(surface.fillRects).toHaveLength(zones.zones.length);
    }
  });

  it('zero zones: empty-state message, axes still drawn', () => {
    const zones = zonesFor(fixtures.pairs.stanza, 9);
    expect(zones.zones).toHaveLength(0);
    const surface = new RecordingSurface();
    const drawn = renderDotplot(surface, [], {
      size: 560, flatColor: false, aLabel: 'A', bLabel: 'B',
    });
    expect(drawn).toBe(0);
    expect(surface.strokeRects.length).toBeGreaterThan(0); // the frame
    expect(surface.texts.some((t) => t.includes('no similarity zones'))).toBe(true);
  });

  it('outlines the selected zone', () => {
    const zones = zonesFor(fixtures.pairs.verse, 4);
    const models = buildViewModels(zones.zones, {
      size: 560, aChars: zones.a_char_count, bChars: zones.b_char_count,
    });
    const surface = new RecordingSurface();
    renderDotplot(surface, models, {
      size: 560, flatColor: false, aLabel: 'A', bLabel: 'B',
    }, models[0].zoneId);
    expect(surface.strokeRects.length).toBe(2); // frame + selection
  });

  it('hover label shows the zone spans and block count', () => {
    const zones = zonesFor(fixtures.pairs.verse, 4);
    const models = buildViewModels(zones.zones, {
      size: 560, aChars: zones.a_char_count, bChars: zones.b_char_count,
    });
    const label = hoverLabel(models[0]);
    expect(label).toContain(String(models[0].aSpan[0]));
    expect(label).toContain('block');
  });
});
