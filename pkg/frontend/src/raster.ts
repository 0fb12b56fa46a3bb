/** Minimal deterministic RGBA rasterizer with a 5x7 bitmap font and PNG output. */

import { PNG } from "pngjs";

export type Color = [number, number, number];

export const WHITE: Color = [255, 255, 255];
export const BLACK: Color = [30, 30, 30];
export const GRAY: Color = [200, 200, 200];

export const PALETTE: Color[] = [
  [31, 119, 180],
  [255, 127, 14],
  [44, 160, 44],
  [214, 39, 40],
  [148, 103, 189],
  [140, 86, 75],
  [227, 119, 194],
  [127, 127, 127],
];

const GLYPHS: Record<string, string[]> = {
  "0": [".XXX.", "X...X", "X..XX", "X.X.X", "XX..X", "X...X", ".XXX."],
  "1": ["..X..", ".XX..", "..X..", "..X..", "..X..", "..X..", ".XXX."],
  "2": [".XXX.", "X...X", "....X", "...X.", "..X..", ".X...", "XXXXX"],
  "3": [".XXX.", "X...X", "....X", "..XX.", "....X", "X...X", ".XXX."],
  "4": ["...X.", "..XX.", ".X.X.", "X..X.", "XXXXX", "...X.", "...X."],
  "5": ["XXXXX", "X....", "XXXX.", "....X", "....X", "X...X", ".XXX."],
  "6": ["..XX.", ".X...", "X....", "XXXX.", "X...X", "X...X", ".XXX."],
  "7": ["XXXXX", "....X", "...X.", "..X..", "..X..", "..X..", "..X.."],
  "8": [".XXX.", "X...X", "X...X", ".XXX.", "X...X", "X...X", ".XXX."],
  "9": [".XXX.", "X...X", "X...X", ".XXXX", "....X", "...X.", ".XX.."],
  ".": [".....", ".....", ".....", ".....", ".....", "..XX.", "..XX."],
  "-": [".....", ".....", ".....", "XXXXX", ".....", ".....", "....."],
  "+": [".....", "..X..", "..X..", "XXXXX", "..X..", "..X..", "....."],
  " ": [".....", ".....", ".....", ".....", ".....", ".....", "....."],
  a: [".....", ".....", ".XXX.", "....X", ".XXXX", "X...X", ".XXXX"],
  c: [".....", ".....", ".XXX.", "X....", "X....", "X...X", ".XXX."],
  e: [".....", ".....", ".XXX.", "X...X", "XXXXX", "X....", ".XXX."],
  i: ["..X..", ".....", ".XX..", "..X..", "..X..", "..X..", ".XXX."],
  k: ["X....", "X....", "X..X.", "X.X..", "XX...", "X.X..", "X..X."],
  l: [".XX..", "..X..", "..X..", "..X..", "..X..", "..X..", ".XXX."],
  o: [".....", ".....", ".XXX.", "X...X", "X...X", "X...X", ".XXX."],
  r: [".....", ".....", "X.XX.", "XX..X", "X....", "X....", "X...."],
  t: ["..X..", "..X..", "XXXXX", "..X..", "..X..", "..X.X", "...X."],
  u: [".....", ".....", "X...X", "X...X", "X...X", "X..XX", ".XX.X"],
  v: [".....", ".....", "X...X", "X...X", "X...X", ".X.X.", "..X.."],
  w: [".....", ".....", "X...X", "X.X.X", "X.X.X", "X.X.X", ".X.X."],
};

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Buffer;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = Buffer.alloc(width * height * 4, 255);
  }

  set(x: number, y: number, color: Color): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const at = (y * this.width + x) * 4;
    this.data[at] = color[0];
    this.data[at + 1] = color[1];
    this.data[at + 2] = color[2];
    this.data[at + 3] = 255;
  }

  get(x: number, y: number): Color {
    const at = (y * this.width + x) * 4;
    return [this.data[at], this.data[at + 1], this.data[at + 2]];
  }

  fillRect(x: number, y: number, w: number, h: number, color: Color): void {
    for (let j = y; j < y + h; j += 1) {
      for (let i = x; i < x + w; i += 1) {
        this.set(i, j, color);
      }
    }
  }

  /** Bresenham segment; `dash` draws only alternating runs of that length. */
  line(x0: number, y0: number, x1: number, y1: number, color: Color, dash = 0): void {
    let x = Math.round(x0);
    let y = Math.round(y0);
    const xe = Math.round(x1);
    const ye = Math.round(y1);
    const dx = Math.abs(xe - x);
    const dy = -Math.abs(ye - y);
    const sx = x < xe ? 1 : -1;
    const sy = y < ye ? 1 : -1;
    let err = dx + dy;
    let step = 0;
    for (;;) {
      if (dash === 0 || Math.floor(step / dash) % 2 === 0) {
        this.set(x, y, color);
      }
      if (x === xe && y === ye) {
        break;
      }
      step += 1;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  polyline(points: [number, number][], color: Color): void {
    for (let i = 1; i < points.length; i += 1) {
      this.line(points[i - 1][0], points[i - 1][1], points[i][0], points[i][1], color);
    }
  }

  marker(x: number, y: number, color: Color, size = 2): void {
    this.fillRect(Math.round(x) - size + 1, Math.round(y) - size + 1, 2 * size - 1, 2 * size - 1, color);
  }

  /** Draw text whose supported alphabet covers the numeric labels and legends. */
  text(x: number, y: number, s: string, color: Color = BLACK): void {
    let cx = Math.round(x);
    for (const ch of s) {
      const glyph = GLYPHS[ch] ?? GLYPHS[ch.toLowerCase()];
      if (glyph) {
        for (let row = 0; row < 7; row += 1) {
          for (let col = 0; col < 5; col += 1) {
            if (glyph[row][col] === "X") {
              this.set(cx + col, Math.round(y) + row, color);
            }
          }
        }
      }
      cx += 6;
    }
  }

  static textWidth(s: string): number {
    return s.length * 6 - 1;
  }

  toPng(): Buffer {
    const png = new PNG({ width: this.width, height: this.height });
    this.data.copy(png.data);
    return PNG.sync.write(png);
  }
}

export function decodePng(buffer: Buffer): { width: number; height: number; data: Buffer } {
  const png = PNG.sync.read(buffer);
  return { width: png.width, height: png.height, data: png.data };
}
