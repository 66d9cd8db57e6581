/**
 * Mapping between document-offset space and the square dot-plot.
 *
 * The x axis carries document A offsets, the y axis document B offsets.
 * Both mappings are monotone linear, so zone rectangles keep their order
 * and a screen hit maps back to the exact document spans it came from.
 */

import type { Span, ZonePayload } from './types.js';

export interface ScreenRect {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface ZoneViewModel {
  zoneId: number;
  aSpan: Span;
  bSpan: Span;
  rect: ScreenRect;
  density: number;
  blockCount: number;
  blockIds: string[];
  clickable: boolean;
}

export interface PlotScale {
  size: number; // square plot, pixels per side
  aChars: number;
  bChars: number;
}

const MIN_ZONE_PIXELS = 3; // a dot must stay visible and clickable

export function toScreenX(scale: PlotScale, offset: number): number {
  return scale.aChars > 0 ? (offset / scale.aChars) * scale.size : 0;
}

export function toScreenY(scale: PlotScale, offset: number): number {
  return scale.bChars > 0 ? (offset / scale.bChars) * scale.size : 0;
}

export function toDocA(scale: PlotScale, x: number): number {
  return scale.size > 0 ? Math.round((x / scale.size) * scale.aChars) : 0;
}

export function toDocB(scale: PlotScale, y: number): number {
  return scale.size > 0 ? Math.round((y / scale.size) * scale.bChars) : 0;
}

export function zoneToRect(scale: PlotScale, aSpan: Span, bSpan: Span): ScreenRect {
  const x = toScreenX(scale, aSpan[0]);
  const y = toScreenY(scale, bSpan[0]);
  const width = Math.max(MIN_ZONE_PIXELS, toScreenX(scale, aSpan[1]) - x);
  const height = Math.max(MIN_ZONE_PIXELS, toScreenY(scale, bSpan[1]) - y);
  return { x, y, width, height };
}

export function buildViewModels(
  zones: ZonePayload[],
  scale: PlotScale,
): ZoneViewModel[] {
  return zones.map((zone) => ({
    zoneId: zone.zone_id,
    aSpan: zone.a_span,
    bSpan: zone.b_span,
    rect: zoneToRect(scale, zone.a_span, zone.b_span),
    density: zone.density,
    blockCount: zone.block_ids.length,
    blockIds: [...zone.block_ids],
    clickable: zone.block_ids.length >= 1,
  }));
}

/** Topmost clickable zone under a screen point, if any. */
export function pickZone(
  models: ZoneViewModel[],
  x: number,
  y: number,
): ZoneViewModel | undefined {
  for (let i = models.length - 1; i >= 0; i--) {
    const m = models[i];
    const r = m.rect;
    if (m.clickable && x >= r.x && x <= r.x + r.width && y >= r.y && y <= r.y + r.height) {
      return m;
    }
  }
  return undefined;
}
