import { diffComponents } from "./diff.js";
import { primaryTensor } from "./primary.js";
import { referenceAvailable, referenceTensor } from "./reference.js";
import { CANARY, casesForSystem } from "./prng.js";
import {
  CaseResult,
  EXIT_MISMATCH,
  EXIT_OK,
  EXIT_SKIP,
  SuiteOptions,
  SuiteSummary,
  TensorCase,
} from "./types.js";

export const DEFAULT_OPTIONS: SuiteOptions = {
  seed: 20240,
  count: 50,
  systems: ["D5", "E6"],
  bound: 2,
  primaryCmd: ["python3", "-m", "weylchar.cli"],
  referenceCmd: ["sage"],
};

export function buildCases(options: SuiteOptions): TensorCase[] {
  const cases: TensorCase[] = [CANARY];
  for (const system of options.systems) {
    cases.push(...casesForSystem(options.seed, options.count, system, options.bound));
  }
  return cases;
}

export interface SuiteOutcome {
  code: number;
  summary: SuiteSummary | null;
}

export function runSuite(options: SuiteOptions, log: (line: string) => void): SuiteOutcome {
  if (!referenceAvailable(options.referenceCmd)) {
    log(`SKIP: reference system '${options.referenceCmd.join(" ")}' is not available`);
    return { code: EXIT_SKIP, summary: null };
  }
  const results: CaseResult[] = [];
  for (const c of buildCases(options)) {
    const primary = primaryTensor(options.primaryCmd, c.system, c.left, c.right);
    const reference = referenceTensor(options.referenceCmd, c.system, c.left, c.right);
    const detail = diffComponents(primary, reference);
    const verdict = detail === null ? "match" : "mismatch";
    const tag = c.canary ? "canary " : "";
    log(`${verdict.toUpperCase()}: ${tag}${c.system} [${c.left}] (x) [${c.right}]` +
      (detail ? ` :: ${detail}` : ""));
    results.push({ ...c, verdict, ...(detail ? { detail } : {}) });
  }
  const status = results.every((r) => r.verdict === "match") ? "PASS" : "FAIL";
  const summary: SuiteSummary = {
    suite: "xcheck",
    seed: options.seed,
    count: options.count,
    bound: options.bound,
    systems: options.systems,
    cases: results,
    status,
  };
  log(status);
  return { code: status === "PASS" ? EXIT_OK : EXIT_MISMATCH, summary };
}
