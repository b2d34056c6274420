/**
 * Board state store.
 *
 * Every displayed H/Ê number originates from a service response kept here
 * verbatim; the store never derives metrics locally. Drags queue moves with
 * last-wins semantics per (workload, window); at most one what-if request is
 * in flight and newer drags coalesce into the next request. A failed request
 * reverts the pending moves to the last acknowledged set and surfaces a
 * toast message.
 */

import type { EvaluationPayload, Move, PortfolioDoc, WhatIfPayload } from "./types.js";

/** What the store needs from the service client (PlanClient satisfies this). */
export interface PlanService {
  evaluate(portfolio: PortfolioDoc, y: number): Promise<EvaluationPayload>;
  whatIf(portfolio: PortfolioDoc, moves: Move[], y: number): Promise<WhatIfPayload>;
}

export interface BoardState {
  portfolio: PortfolioDoc | null;
  baseline: EvaluationPayload | null;
  report: EvaluationPayload | null;
  lastWhatIf: WhatIfPayload | null;
  selectedWindow: string;
  pendingMoves: Move[];
  dirty: boolean;
  inFlight: boolean;
  toast: string | null;
}

type Listener = (state: BoardState) => void;

function sameMoves(a: Move[], b: Move[]): boolean {
  if (a.length !== b.length) return false;
  return a.every(
    (m, i) =>
      m.workload_id === b[i].workload_id &&
      m.window === b[i].window &&
      m.target_quadrant === b[i].target_quadrant,
  );
}

export class BoardStore {
  private state: BoardState = {
    portfolio: null,
    baseline: null,
    report: null,
    lastWhatIf: null,
    selectedWindow: "",
    pendingMoves: [],
    dirty: false,
    inFlight: false,
    toast: null,
  };
  private listeners: Listener[] = [];
  private acknowledgedMoves: Move[] = [];
  private queued = false;

  constructor(
    private readonly client: PlanService,
    private y: number = 1.0,
  ) {}

  getState(): BoardState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<BoardState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  setY(y: number): void {
    this.y = y;
  }

  /** Evaluate a portfolio and make the response the board's baseline. */
  async load(portfolio: PortfolioDoc): Promise<void> {
    this.update({ inFlight: true, toast: null });
    try {
      const report = await this.client.evaluate(portfolio, this.y);
      this.acknowledgedMoves = [];
      this.update({
        portfolio,
        baseline: report,
        report,
        lastWhatIf: null,
        selectedWindow: report.schedule[0] ?? "default",
        pendingMoves: [],
        dirty: false,
        inFlight: false,
      });
    } catch (error) {
      this.update({ inFlight: false, toast: String((error as Error).message ?? error) });
    }
  }

  selectWindow(window: string): void {
    if (this.state.report && !this.state.report.schedule.includes(window)) return;
    this.update({ selectedWindow: window });
  }

  /** Queue a quadrant move (last wins per workload/window) and sync. */
  queueMove(move: Move): void {
    const kept = this.state.pendingMoves.filter(
      (m) => !(m.workload_id === move.workload_id && m.window === move.window),
    );
    this.update({ pendingMoves: [...kept, move], dirty: true, toast: null });
    void this.sync();
  }

  /** Drop all pending moves and restore the initial server-evaluated state. */
  reset(): void {
    this.acknowledgedMoves = [];
    this.update({
      pendingMoves: [],
      report: this.state.baseline,
      lastWhatIf: null,
      dirty: false,
      toast: null,
    });
  }

  private async sync(): Promise<void> {
    if (this.state.inFlight) {
      this.queued = true;
      return;
    }
    if (!this.state.portfolio) return;
    const snapshot = [...this.state.pendingMoves];
    if (snapshot.length === 0) {
      this.acknowledgedMoves = [];
      this.update({ report: this.state.baseline, lastWhatIf: null, dirty: false });
      return;
    }
    this.update({ inFlight: true });
    try {
      const payload = await this.client.whatIf(this.state.portfolio, snapshot, this.y);
      if (sameMoves(snapshot, this.state.pendingMoves)) {
        this.acknowledgedMoves = snapshot;
        this.update({ report: payload.after, lastWhatIf: payload, inFlight: false });
      } else {
        this.update({ inFlight: false }); // stale response; the queued sync refires
      }
    } catch (error) {
      if (sameMoves(snapshot, this.state.pendingMoves)) {
        // board reverts to the last acknowledged state, non-blocking toast
        this.update({
          pendingMoves: [...this.acknowledgedMoves],
          dirty: this.acknowledgedMoves.length > 0,
          inFlight: false,
          toast: String((error as Error).message ?? error),
        });
      } else {
        // newer moves arrived while this request was failing; retry with them
        this.update({ inFlight: false, toast: String((error as Error).message ?? error) });
      }
    }
    if (this.queued || !sameMoves(snapshot, this.state.pendingMoves)) {
      this.queued = false;
      void this.sync();
    }
  }
}
