/** Shared test plumbing: fixture loading and a scripted service stub. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { PlanService } from "../src/state.js";
import type { EvaluationPayload, Move, PortfolioDoc, WhatIfPayload } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8")) as T;
}

export function samplePortfolio(): PortfolioDoc {
  return JSON.parse(readFileSync(join(here, "..", "sample.json"), "utf8")) as PortfolioDoc;
}

export function moveKey(moves: Move[]): string {
  return moves.map((m) => `${m.workload_id}:${m.target_quadrant}@${m.window}`).join(",");
}

export interface StubCall {
  kind: "evaluate" | "whatif";
  moves: Move[];
}

/** PlanService fed by canned payloads, keyed by the exact move set. */
export class StubService implements PlanService {
  calls: StubCall[] = [];

  constructor(
    private readonly evaluation: EvaluationPayload,
    private readonly whatIfByMoves: Record<string, WhatIfPayload> = {},
  ) {}

  async evaluate(_portfolio: PortfolioDoc, _y: number): Promise<EvaluationPayload> {
    this.calls.push({ kind: "evaluate", moves: [] });
    return this.evaluation;
  }

  async whatIf(_portfolio: PortfolioDoc, moves: Move[], _y: number): Promise<WhatIfPayload> {
    this.calls.push({ kind: "whatif", moves: [...moves] });
    const payload = this.whatIfByMoves[moveKey(moves)];
    if (!payload) throw new Error(`no canned what-if for move set ${moveKey(moves)}`);
    return payload;
  }
}

/** Deferred promise helper for in-flight coalescing tests. */
export function deferred<T>(): { promise: Promise<T>; resolve: (v: T) => void; reject: (e: unknown) => void } {
  let resolve!: (v: T) => void;
  let reject!: (e: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

export async function flushAsync(times = 6): Promise<void> {
  for (let i = 0; i < times; i += 1) await Promise.resolve();
}
