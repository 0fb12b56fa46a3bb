/** CSV parsing and schema validation for the younggraph table formats. */

export interface Table {
  header: string[];
  rows: string[][];
}

/** Parse simple comma-separated text (no quoting is used by the producers). */
export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV: no header line");
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new Error(`row ${i + 1} has ${cells.length} cells, header has ${header.length}`);
    }
    return cells;
  });
  return { header, rows };
}

/** Require the header to match exactly, reporting the column diff otherwise. */
export function checkSchema(table: Table, expected: string[]): void {
  const have = new Set(table.header);
  const want = new Set(expected);
  const missing = expected.filter((c) => !have.has(c));
  const unexpected = table.header.filter((c) => !want.has(c));
  const sameOrder = table.header.join(",") === expected.join(",");
  if (missing.length > 0 || unexpected.length > 0 || !sameOrder) {
    throw new Error(
      `CSV schema mismatch: expected columns [${expected.join(", ")}], ` +
        `got [${table.header.join(", ")}]` +
        (missing.length ? `; missing: ${missing.join(", ")}` : "") +
        (unexpected.length ? `; unexpected: ${unexpected.join(", ")}` : ""),
    );
  }
  if (table.rows.length === 0) {
    throw new Error("CSV has a valid header but no data rows");
  }
}

/** Column accessor by name. */
export function column(table: Table, name: string): string[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new Error(`no column named ${name}`);
  }
  return table.rows.map((row) => row[idx]);
}
