import { spawnSync } from "node:child_process";
import { Component } from "./types.js";

/**
 * Reference computer algebra system adapter.
 *
 * The reference is driven through its Weyl character ring with coroot-style
 * labels, which coincide one-to-one with the primary engine's
 * fundamental-basis tuples, so no coordinate translation is needed: we just
 * parse the printed sum `k*E6(n1,...,n6) + ...`.
 */
export function referenceAvailable(cmd: string[]): boolean {
  try {
    const proc = spawnSync(cmd[0], [...cmd.slice(1), "--version"], {
      encoding: "utf-8",
      timeout: 60_000,
    });
    return proc.status === 0;
  } catch {
    return false;
  }
}

export function referenceScript(system: string, left: number[], right: number[]): string {
  return (
    `R = WeylCharacterRing("${system}", style="coroots"); ` +
    `print(R(${left.join(",")})*R(${right.join(",")}))`
  );
}

const TERM = /(?:(\d+)\s*\*\s*)?[A-Z]\d*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)/g;

export function parseReferenceOutput(text: string): Component[] {
  const components: Component[] = [];
  for (const match of text.matchAll(TERM)) {
    components.push({
      mult: match[1] ? Number(match[1]) : 1,
      weight: match[2].split(",").map((t) => Number(t.trim())),
    });
  }
  if (!components.length) {
    throw new Error(`could not parse reference output: ${text.slice(0, 200)}`);
  }
  return components;
}

export function referenceTensor(
  cmd: string[],
  system: string,
  left: number[],
  right: number[],
): Component[] {
  const proc = spawnSync(cmd[0], [...cmd.slice(1), "-c", referenceScript(system, left, right)], {
    encoding: "utf-8",
    maxBuffer: 64 * 1024 * 1024,
    timeout: 600_000,
  });
  if (proc.error) throw proc.error;
  if (proc.status !== 0) {
    throw new Error(`reference system failed (${proc.status}): ${proc.stderr || proc.stdout}`);
  }
  return parseReferenceOutput(proc.stdout);
}
