/** Numeric parsing for the exact "num/den" rational strings in the CSVs. */

export function parseRational(text: string): number {
  const s = text.trim();
  if (s.includes("/")) {
    const [num, den] = s.split("/");
    const n = Number(num);
    const d = Number(den);
    if (!Number.isFinite(n) || !Number.isFinite(d) || d === 0) {
      throw new Error(`malformed rational: ${text}`);
    }
    return n / d;
  }
  const v = Number(s);
  if (!Number.isFinite(v)) {
    throw new Error(`malformed number: ${text}`);
  }
  return v;
}

export function parseRationalList(text: string): number[] {
  const s = text.trim();
  if (s === "") {
    return [];
  }
  return s.split(",").map(parseRational);
}
