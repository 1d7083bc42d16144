import { TensorCase } from "./types.js";

/** mulberry32: small deterministic PRNG, reproducible across platforms. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function systemRank(system: string): number {
  const rank = Number(system.slice(1));
  if (!/^[ADE]\d+$/.test(system) || !Number.isInteger(rank) || rank < 1) {
    throw new Error(`bad system descriptor ${system}`);
  }
  return rank;
}

function systemSeed(seed: number, system: string): number {
  let h = seed >>> 0;
  for (const ch of system) h = (Math.imul(h, 31) + ch.charCodeAt(0)) >>> 0;
  return h;
}

/** The (seed, count, bound)-reproducible case list for one system. */
export function casesForSystem(
  seed: number,
  count: number,
  system: string,
  bound: number,
): TensorCase[] {
  const rank = systemRank(system);
  const next = mulberry32(systemSeed(seed, system));
  const randCoord = () => Math.floor(next() * (bound + 1));
  const cases: TensorCase[] = [];
  for (let i = 0; i < count; i++) {
    cases.push({
      system,
      left: Array.from({ length: rank }, randCoord),
      right: Array.from({ length: rank }, randCoord),
      canary: false,
    });
  }
  return cases;
}

/** Fixed canary: the published 29-component product on E6. */
export const CANARY: TensorCase = {
  system: "E6",
  left: [1, 0, 0, 0, 0, 1],
  right: [2, 0, 0, 0, 0, 2],
  canary: true,
};
