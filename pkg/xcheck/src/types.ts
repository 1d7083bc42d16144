export interface Component {
  weight: number[];
  mult: number;
}

export interface TensorCase {
  system: string;
  left: number[];
  right: number[];
  canary: boolean;
}

export interface CaseResult {
  system: string;
  left: number[];
  right: number[];
  canary: boolean;
  verdict: "match" | "mismatch";
  detail?: string;
}

export interface SuiteOptions {
  seed: number;
  count: number;
  systems: string[];
  bound: number;
  primaryCmd: string[];
  referenceCmd: string[];
}

export interface SuiteSummary {
  suite: "xcheck";
  seed: number;
  count: number;
  bound: number;
  systems: string[];
  cases: CaseResult[];
  status: "PASS" | "FAIL";
}

/** Exit codes: 0 all match, 1 any mismatch, 77 reference system absent. */
export const EXIT_OK = 0;
export const EXIT_MISMATCH = 1;
export const EXIT_SKIP = 77;
