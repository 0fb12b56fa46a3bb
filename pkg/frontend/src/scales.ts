/** Linear and log10 axis scales with simple deterministic tick generation. */

export interface Scale {
  toPixel(value: number): number;
  ticks(): { value: number; label: string }[];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
  tickCount = 5,
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const step = niceStep(span / tickCount);
  return {
    toPixel: (v) => r0 + ((v - d0) / span) * (r1 - r0),
    ticks: () => {
      const out: { value: number; label: string }[] = [];
      for (let v = Math.ceil(d0 / step) * step; v <= d1 + 1e-12; v += step) {
        const rounded = Math.round(v / step) * step;
        out.push({ value: rounded, label: formatTick(rounded) });
      }
      return out;
    },
  };
}

/** Log10 scale; the domain must be strictly positive. */
export function log10Scale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error("log scale needs positive values");
  }
  const lo = Math.floor(Math.log10(d0));
  const hi = Math.ceil(Math.log10(d1));
  const span = hi - lo || 1;
  const [r0, r1] = range;
  return {
    toPixel: (v) => r0 + ((Math.log10(v) - lo) / span) * (r1 - r0),
    ticks: () => {
      const out: { value: number; label: string }[] = [];
      for (let e = lo; e <= hi; e += 1) {
        out.push({ value: 10 ** e, label: `1e${e}` });
      }
      return out;
    },
  };
}

function niceStep(raw: number): number {
  const power = 10 ** Math.floor(Math.log10(raw));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  for (const c of candidates) {
    if (c >= raw) {
      return c;
    }
  }
  return candidates[candidates.length - 1];
}

export function formatTick(v: number): string {
  if (v === 0) {
    return "0";
  }
  if (Math.abs(v) >= 1000 || Math.abs(v) < 0.001) {
    const e = Math.floor(Math.log10(Math.abs(v)));
    const m = v / 10 ** e;
    const mm = Math.round(m * 10) / 10;
    return `${mm}e${e}`;
  }
  return String(Math.round(v * 1000) / 1000);
}
