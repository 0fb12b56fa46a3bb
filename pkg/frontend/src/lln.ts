/** Scaled row/column trajectories across trials, with parameter reference lines.
 *
 * Input schema: trial,n,kind,index,value (exact rationals in `value`).
 * One series per (kind, index); dashed horizontal reference lines mark the
 * target values passed as --alpha / --beta.
 */

import { checkSchema, parseCsv } from "./csv.js";
import { parseRational } from "./rational.js";
import { BLACK, GRAY, PALETTE, Raster, type Color } from "./raster.js";
import { linearScale } from "./scales.js";

export interface LlnJob {
  alpha: number[];
  beta: number[];
  width?: number;
  height?: number;
}

export const LLN_COLUMNS = ["trial", "n", "kind", "index", "value"];

interface Series {
  key: string;
  points: [number, number][];
  color: Color;
  reference?: number;
}

export function renderLln(csvText: string, job: LlnJob): Buffer {
  const table = parseCsv(csvText);
  checkSchema(table, LLN_COLUMNS);
  const idx = Object.fromEntries(table.header.map((h, i) => [h, i]));

  const grouped = new Map<string, [number, number][]>();
  for (const row of table.rows) {
    const key = `${row[idx.kind]} ${row[idx.index]}`;
    const trial = Number(row[idx.trial]);
    const value = parseRational(row[idx.value]);
    if (!grouped.has(key)) {
      grouped.set(key, []);
    }
    grouped.get(key)!.push([trial, value]);
  }

  const keys = [...grouped.keys()].sort();
  const series: Series[] = keys.map((key, i) => {
    const [kind, indexText] = key.split(" ");
    const refs = kind === "row" ? job.alpha : job.beta;
    const reference = refs[Number(indexText) - 1];
    const points = grouped.get(key)!.sort((a, b) => a[0] - b[0]);
    return { key, points, color: PALETTE[i % PALETTE.length], reference };
  });

  const width = job.width ?? 640;
  const height = job.height ?? 400;
  const margin = { left: 56, right: 120, top: 16, bottom: 42 };
  const img = new Raster(width, height);

  const trials = series.flatMap((s) => s.points.map((p) => p[0]));
  const xScale = linearScale(
    [Math.min(...trials), Math.max(...trials)],
    [margin.left, width - margin.right],
    6,
  );
  const yScale = linearScale([0, 1], [height - margin.bottom, margin.top], 5);

  // frame and grid
  img.fillRect(margin.left, margin.top, width - margin.left - margin.right, 1, BLACK);
  img.fillRect(margin.left, height - margin.bottom, width - margin.left - margin.right, 1, BLACK);
  img.fillRect(margin.left, margin.top, 1, height - margin.top - margin.bottom, BLACK);
  img.fillRect(width - margin.right, margin.top, 1, height - margin.top - margin.bottom + 1, BLACK);
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
  img.text(margin.left + 4, height - 14, "trial");
  img.text(4, margin.top + 2, "value");

  // dashed reference lines at the target parameters, matching series colors
  for (const s of series) {
    if (s.reference !== undefined) {
      const y = yScale.toPixel(s.reference);
      img.line(margin.left + 1, y, width - margin.right - 1, y, s.color, 4);
    }
  }

  for (const s of series) {
    const pts: [number, number][] = s.points.map(([t, v]) => [xScale.toPixel(t), yScale.toPixel(v)]);
    img.polyline(pts, s.color);
    for (const [px, py] of pts) {
      img.marker(px, py, s.color, 2);
    }
  }

  // legend
  let ly = margin.top + 6;
  for (const s of series) {
    img.fillRect(width - margin.right + 10, ly + 2, 14, 3, s.color);
    img.text(width - margin.right + 30, ly, s.key);
    ly += 14;
  }
  img.fillRect(width - margin.right + 10, ly + 3, 3, 1, BLACK);
  img.fillRect(width - margin.right + 16, ly + 3, 3, 1, BLACK);
  img.fillRect(width - margin.right + 22, ly + 3, 3, 1, BLACK);
  img.text(width - margin.right + 30, ly, "target");

  return img.toPng();
}
