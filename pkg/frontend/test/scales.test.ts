import { describe, expect, it } from "vitest";

import { formatTick, linearScale, log10Scale } from "../src/scales.js";

describe("linearScale", () => {
  it("maps the domain endpoints to the range endpoints", () => {
    const s = linearScale([0, 10], [100, 200]);
    expect(s.toPixel(0)).toBe(100);
    expect(s.toPixel(10)).toBe(200);
    expect(s.toPixel(5)).toBe(150);
  });

  it("supports inverted pixel ranges (y axes grow downward)", () => {
    const s = linearScale([0, 1], [400, 0]);
    expect(s.toPixel(0)).toBe(400);
    expect(s.toPixel(1)).toBe(0);
  });

  it("produces ticks inside the domain", () => {
    const ticks = linearScale([0, 50], [0, 100], 5).ticks();
    expect(ticks.length).toBeGreaterThanOrEqual(4);
    for (const t of ticks) {
      expect(t.value).toBeGreaterThanOrEqual(0);
      expect(t.value).toBeLessThanOrEqual(50);
    }
  });
});

describe("log10Scale", () => {
  it("uses whole decades", () => {
    const s = log10Scale([0.002, 0.02], [300, 0]);
    const labels = s.ticks().map((t) => t.label);
    expect(labels).toEqual(["1e-3", "1e-2", "1e-1"]);
  });

  it("is monotone decreasing in pixel space for a downward range", () => {
    const s = log10Scale([0.001, 1], [300, 0]);
    expect(s.toPixel(0.001)).toBeGreaterThan(s.toPixel(0.01));
    expect(s.toPixel(0.01)).toBeGreaterThan(s.toPixel(0.1));
  });

  it("rejects nonpositive domains", () => {
    expect(() => log10Scale([0, 1], [0, 1])).toThrow(/positive/);
  });
});

describe("formatTick", () => {
  it("keeps small numbers plain and large ones scientific", () => {
    expect(formatTick(0)).toBe("0");
    expect(formatTick(0.25)).toBe("0.25");
    expect(formatTick(20000)).toBe("2e4");
  });
});
