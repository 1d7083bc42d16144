import { Component } from "./types.js";

function compareWeights(a: number[], b: number[]): number {
  for (let i = 0; i < Math.min(a.length, b.length); i++) {
    if (a[i] !== b[i]) return a[i] - b[i];
  }
  return a.length - b.length;
}

/** Merge duplicates and sort lexicographically, so diffs are order-insensitive. */
export function normalize(components: Component[]): Component[] {
  const byKey = new Map<string, Component>();
  for (const { weight, mult } of components) {
    const key = weight.join(",");
    const existing = byKey.get(key);
    if (existing) {
      existing.mult += mult;
    } else {
      byKey.set(key, { weight: [...weight], mult });
    }
  }
  return [...byKey.values()]
    .filter((c) => c.mult !== 0)
    .sort((x, y) => compareWeights(x.weight, y.weight));
}

/** Multiplicity-exact comparison; returns a human-readable reason on failure. */
export function diffComponents(left: Component[], right: Component[]): string | null {
  const a = normalize(left);
  const b = normalize(right);
  const keys = new Map<string, [number, number]>();
  for (const c of a) keys.set(c.weight.join(","), [c.mult, 0]);
  for (const c of b) {
    const key = c.weight.join(",");
    const entry = keys.get(key) ?? [0, 0];
    entry[1] = c.mult;
    keys.set(key, entry);
  }
  const problems: string[] = [];
  for (const [key, [ma, mb]] of [...keys.entries()].sort()) {
    if (ma !== mb) problems.push(`[${key}]: ${ma} vs ${mb}`);
  }
  return problems.length ? problems.join("; ") : null;
}
