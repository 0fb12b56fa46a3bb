/** Total-variation convergence curve on a log-scale vertical axis.
 *
 * Input schema: k,r,tv.  The tv column is plotted against k with y on a
 * decade log axis, so straight-ish descent means power-law convergence.
 */

import { checkSchema, parseCsv } from "./csv.js";
import { parseRational } from "./rational.js";
import { BLACK, GRAY, PALETTE, Raster } from "./raster.js";
import { linearScale, log10Scale } from "./scales.js";

export const CONVERGE_COLUMNS = ["k", "r", "tv"];

export interface ConvergeJob {
  width?: number;
  height?: number;
}

export function renderConverge(csvText: string, job: ConvergeJob = {}): Buffer {
  const table = parseCsv(csvText);
  checkSchema(table, CONVERGE_COLUMNS);
  const idx = Object.fromEntries(table.header.map((h, i) => [h, i]));
  let points: [number, number][] = table.rows
    .map((row) => [Number(row[idx.k]), parseRational(row[idx.tv])] as [number, number])
    .sort((a, b) => a[0] - b[0]);

  const positive = points.filter(([, tv]) => tv > 0);
  if (positive.length === 0) {
    throw new Error("all tv values are zero; nothing to draw on a log axis");
  }
  const floor = Math.min(...positive.map(([, tv]) => tv)) / 10;
  points = points.map(([k, tv]) => [k, Math.max(tv, floor)]);

  const width = job.width ?? 560;
  const height = job.height ?? 400;
  const margin = { left: 64, right: 24, top: 16, bottom: 42 };
  const img = new Raster(width, height);

  const xScale = linearScale(
    [0, Math.max(...points.map(([k]) => k))],
    [margin.left, width - margin.right],
    6,
  );
  const tvs = points.map(([, tv]) => tv);
  const yScale = log10Scale(
    [Math.min(...tvs), Math.max(...tvs)],
    [height - margin.bottom, margin.top],
  );

  img.fillRect(margin.left, margin.top, width - margin.left - margin.right, 1, BLACK);
  img.fillRect(margin.left, height - margin.bottom, width - margin.left - margin.right, 1, BLACK);
  img.fillRect(margin.left, margin.top, 1, height - margin.top - margin.bottom, BLACK);
  for (const tick of yScale.ticks()) {
    const y = yScale.toPixel(tick.value);
    img.line(margin.left + 1, y, width - margin.right - 1, y, GRAY);
    img.text(margin.left - 8 - Raster.textWidth(tick.label), y - 3, tick.label);
    img.fillRect(margin.left - 4, Math.round(y), 4, 1, BLACK);
  }
  for (const tick of xScale.ticks()) {
    const x = xScale.toPixel(tick.value);
    img.fillRect(Math.round(x), height - margin.bottom, 1, 4, BLACK);
    img.text(x - Raster.textWidth(tick.label) / 2, height - margin.bottom + 8, tick.label);
  }
  img.text(width - margin.right - 10, height - 14, "k");
  img.text(4, margin.top + 2, "tv");

  const color = PALETTE[0];
  const pixels: [number, number][] = points.map(([k, tv]) => [
    xScale.toPixel(k),
    yScale.toPixel(tv),
  ]);
  img.polyline(pixels, color);
  for (const [px, py] of pixels) {
    img.marker(px, py, color, 3);
  }
  return img.toPng();
}
