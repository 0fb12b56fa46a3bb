import { describe, expect, it } from "vitest";

import { checkSchema, column, parseCsv } from "../src/csv.js";
import { parseRational, parseRationalList } from "../src/rational.js";

describe("parseCsv", () => {
  it("splits header and rows", () => {
    const table = parseCsv("a,b\n1,2\n3,4\n");
    expect(table.header).toEqual(["a", "b"]);
    expect(table.rows).toEqual([
      ["1", "2"],
      ["3", "4"],
    ]);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1\n")).toThrow(/row 1/);
  });

  it("rejects empty input", () => {
    expect(() => parseCsv("")).toThrow(/header/);
  });
});

describe("checkSchema", () => {
  it("accepts the exact column list", () => {
    const table = parseCsv("k,r,tv\n1,2,0.5\n");
    expect(() => checkSchema(table, ["k", "r", "tv"])).not.toThrow();
  });

  it("reports missing and unexpected columns", () => {
    const table = parseCsv("trial,n,kind,value\n0,10,row,1/2\n");
    expect(() => checkSchema(table, ["trial", "n", "kind", "index", "value"])).toThrow(
      /missing: index/,
    );
    const extra = parseCsv("k,r,tv,zz\n1,2,0.5,9\n");
    expect(() => checkSchema(extra, ["k", "r", "tv"])).toThrow(/unexpected: zz/);
  });

  it("rejects a header with no data rows", () => {
    const table = parseCsv("k,r,tv\n");
    expect(() => checkSchema(table, ["k", "r", "tv"])).toThrow(/no data rows/);
  });
});

describe("column", () => {
  it("extracts by name", () => {
    const table = parseCsv("k,tv\n1,0.5\n2,0.25\n");
    expect(column(table, "tv")).toEqual(["0.5", "0.25"]);
    expect(() => column(table, "zz")).toThrow(/no column/);
  });
});

describe("rationals", () => {
  it("parses fractions and decimals", () => {
    expect(parseRational("7/10")).toBeCloseTo(0.7, 12);
    expect(parseRational("173/250")).toBeCloseTo(0.692, 12);
    expect(parseRational("0.25")).toBe(0.25);
    expect(parseRational("3")).toBe(3);
  });

  it("parses lists and the empty list", () => {
    expect(parseRationalList("7/10,3/10")).toEqual([0.7, 0.3]);
    expect(parseRationalList("")).toEqual([]);
  });

  it("rejects garbage", () => {
    expect(() => parseRational("x/y")).toThrow(/malformed/);
    expect(() => parseRational("1/0")).toThrow(/malformed/);
  });
});
