/**
 * Square dot-plot renderer. Document A runs along the x axis, document B
 * along the y axis; each similarity zone is one filled rectangle. The
 * drawing surface is injected, so tests can record draw calls headlessly.
 */

import type { ZoneViewModel } from './scale.js';

/** The subset of CanvasRenderingContext2D the plot needs. */
export interface DrawSurface {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  globalAlpha: number;
  font: string;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  fillText(text: string, x: number, y: number): void;
}

export interface DotplotOptions {
  size: number;
  flatColor: boolean; // plain red zones instead of density shading
  aLabel: string;
  bLabel: string;
}

const ZONE_COLOR = '#c03030';

function densityAlpha(density: number): number {
  // density is blocks per covered character; keep visible on any scale
  const scaled = Math.min(1, Math.max(0.25, density * 2000));
  return scaled;
}

export function renderDotplot(
  surface: DrawSurface,
  zones: ZoneViewModel[],
  options: DotplotOptions,
  selectedZoneId: number | null = null,
): number {
  const { size } = options;
  surface.globalAlpha = 1;
  surface.clearRect(0, 0, size, size);
  surface.strokeStyle = '#888888';
  surface.strokeRect(0.5, 0.5, size - 1, size - 1);
  surface.font = '12px sans-serif';
  surface.fillStyle = '#555555';
  surface.fillText(options.aLabel, 8, size - 8);
  surface.fillText(options.bLabel, 8, 16);

  let drawn = 0;
  for (const zone of zones) {
    surface.globalAlpha = options.flatColor ? 1 : densityAlpha(zone.density);
    surface.fillStyle = ZONE_COLOR;
    surface.fillRect(zone.rect.x, zone.rect.y, zone.rect.width, zone.rect.height);
    if (zone.zoneId === selectedZoneId) {
      surface.globalAlpha = 1;
      surface.strokeStyle = '#202020';
      surface.strokeRect(zone.rect.x, zone.rect.y, zone.rect.width, zone.rect.height);
    }
    drawn += 1;
  }
  surface.globalAlpha = 1;
  if (drawn === 0) {
    surface.fillStyle = '#555555';
    surface.fillText('no similarity zones at these parameters', 16, size / 2);
  }
  return drawn;
}

export function hoverLabel(zone: ZoneViewModel): string {
  return (
    `A ${zone.aSpan[0]}–${zone.aSpan[1]} × B ${zone.bSpan[0]}–${zone.bSpan[1]}` +
    ` · ${zone.blockCount} block${zone.blockCount === 1 ? '' : 's'}`
  );
}
