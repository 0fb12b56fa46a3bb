import { spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { run } from "../src/cli.js";

const FIXTURES = join(__dirname, "fixtures");
const BIN = join(__dirname, "..", "dist", "bin.js");

describe("run", () => {
  it("renders the growth-statistics figure", () => {
    const out = join(mkdtempSync(join(tmpdir(), "plots-")), "lln.png");
    const code = run([
      "lln",
      "--csv", join(FIXTURES, "lln.csv"),
      "--alpha", "7/10,3/10",
      "--out", out,
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out).subarray(1, 4).toString()).toBe("PNG");
  });

  it("renders the convergence figure", () => {
    const out = join(mkdtempSync(join(tmpdir(), "plots-")), "conv.png");
    expect(run(["converge", "--csv", join(FIXTURES, "converge.csv"), "--out", out])).toBe(0);
    expect(existsSync(out)).toBe(true);
  });

  it("fails with a nonzero code on schema mismatch and writes nothing", () => {
    const out = join(mkdtempSync(join(tmpdir(), "plots-")), "bad.png");
    const code = run(["lln", "--csv", join(FIXTURES, "bad_schema.csv"), "--out", out]);
    expect(code).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it("fails on unknown kinds and missing flags", () => {
    expect(run(["histogram"])).toBe(1);
    expect(run(["lln"])).toBe(1);
  });
});

describe("built binary", () => {
  it("works end to end through node", () => {
    const dir = mkdtempSync(join(tmpdir(), "plots-"));
    const out = join(dir, "conv.png");
    const result = spawnSync("node", [
      BIN, "converge", "--csv", join(FIXTURES, "converge.csv"), "--out", out,
    ]);
    expect(result.status).toBe(0);
    expect(existsSync(out)).toBe(true);
  });

  it("exits 1 on schema mismatch", () => {
    const dir = mkdtempSync(join(tmpdir(), "plots-"));
    const result = spawnSync("node", [
      BIN, "lln", "--csv", join(FIXTURES, "bad_schema.csv"), "--out", join(dir, "x.png"),
    ]);
    expect(result.status).toBe(1);
    expect(String(result.stderr)).toMatch(/schema mismatch/);
  });
});
