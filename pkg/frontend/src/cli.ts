/** Command line: render younggraph CSV outputs as PNG figures.
 *
 *   plot lln      --csv lln.csv  --alpha 7/10,3/10 [--beta ...] --out lln.png
 *   plot converge --csv conv.csv --out conv.png
 *
 * Exit codes: 0 on success, 1 on usage errors or schema mismatches (nothing
 * is written in that case).
 */

import { readFileSync, writeFileSync } from "node:fs";

import { renderConverge } from "./converge.js";
import { renderLln } from "./lln.js";
import { parseRationalList } from "./rational.js";

interface Flags {
  [name: string]: string;
}

function parseFlags(argv: string[]): { positional: string[]; flags: Flags } {
  const positional: string[] = [];
  const flags: Flags = {};
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i];
    if (arg.startsWith("--")) {
      const name = arg.slice(2);
      const value = argv[i + 1];
      if (value === undefined) {
        throw new Error(`flag --${name} needs a value`);
      }
      flags[name] = value;
      i += 1;
    } else {
      positional.push(arg);
    }
  }
  return { positional, flags };
}

const USAGE =
  "usage: plot lln --csv FILE --out FILE.png [--alpha a1,a2] [--beta b1,b2]\n" +
  "       plot converge --csv FILE --out FILE.png";

export function run(argv: string[]): number {
  try {
    const { positional, flags } = parseFlags(argv);
    const kind = positional[0];
    if (kind !== "lln" && kind !== "converge") {
      throw new Error(`unknown plot kind ${kind ?? "(none)"}\n${USAGE}`);
    }
    if (!flags.csv || !flags.out) {
      throw new Error(`--csv and --out are required\n${USAGE}`);
    }
    const csvText = readFileSync(flags.csv, "utf8");
    let png: Buffer;
    if (kind === "lln") {
      png = renderLln(csvText, {
        alpha: parseRationalList(flags.alpha ?? ""),
        beta: parseRationalList(flags.beta ?? ""),
      });
    } else {
      png = renderConverge(csvText);
    }
    writeFileSync(flags.out, png);
    console.log(`wrote ${flags.out} (${png.length} bytes)`);
    return 0;
  } catch (error) {
    console.error(`plot: error: ${error instanceof Error ? error.message : error}`);
    return 1;
  }
}
