import { spawnSync } from "node:child_process";
import { Component } from "./types.js";

export interface PrimaryPayload {
  system: { series: string; rank: number };
  factors: number[][];
  components: Component[];
}

/** One tensor decomposition through the primary CLI's JSON interface. */
export function primaryTensor(
  cmd: string[],
  system: string,
  left: number[],
  right: number[],
): Component[] {
  const args = [
    ...cmd.slice(1),
    "--format", "json",
    "tensor",
    "--type", system,
    "--left", left.join(","),
    "--right", right.join(","),
  ];
  const proc = spawnSync(cmd[0], args, { encoding: "utf-8", maxBuffer: 64 * 1024 * 1024 });
  if (proc.error) throw proc.error;
  if (proc.status !== 0) {
    throw new Error(`primary engine failed (${proc.status}): ${proc.stderr || proc.stdout}`);
  }
  const payload = JSON.parse(proc.stdout) as PrimaryPayload;
  return payload.components;
}
