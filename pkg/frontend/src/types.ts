/** Wire types mirroring the planning service payloads. */

export type Quadrant = "Q1" | "Q2" | "Q3" | "Q4";

export interface QuadrantCountsPayload {
  w1: number;
  w2: number;
  w3: number;
  w4: number;
}

export interface WindowMetricsPayload {
  window: string;
  counts: QuadrantCountsPayload;
  h: number;
  h_display: number;
  terms: Record<Quadrant, number>;
  effort_pm: number;
  relative_cost: number;
}

export interface PlacementWindowPayload {
  window: string;
  quadrant: Quadrant;
  options: string[];
}

export interface PlacementPayload {
  workload_id: string;
  windows: PlacementWindowPayload[];
}

export interface GroupPayload {
  industry: string;
  delta_w: number;
  x: number;
  windows: WindowMetricsPayload[];
  peak: { window: string; h: number; h_display: number; effort_pm: number };
  placements: PlacementPayload[];
  warnings: string[];
}

export interface EvaluationPayload {
  portfolio_digest: string;
  schedule: string[];
  groups: GroupPayload[];
  totals: {
    workload_count: number;
    effort_pm: number;
    relative_cost: Record<string, number>;
  };
  provider: { k: number; y: number };
  warnings: string[];
  variance: unknown;
  constants: Record<string, unknown>;
}

export interface MoveOutcomePayload {
  workload_id: string;
  window: string;
  target_quadrant: Quadrant;
  quadrant_before: string;
  crossed_clic: boolean;
}

export interface DeltaRowPayload {
  industry: string;
  window: string;
  before: number | null;
  after: number;
  delta: number | null;
}

export interface WhatIfPayload {
  before: EvaluationPayload;
  after: EvaluationPayload;
  delta: {
    h_by_group_window: DeltaRowPayload[];
    effort_by_group: { industry: string; before: number | null; after: number; delta: number | null }[];
    total_effort_pm: { before: number; after: number; delta: number };
  };
  moves: MoveOutcomePayload[];
  warnings: string[];
}

export interface OverrideDoc {
  window: string;
  isolation_demand?: number;
  control_demand?: number;
  pinned_quadrant?: Quadrant;
}

export interface WorkloadDoc {
  id: string;
  name?: string;
  industry: string;
  isolation_demand: number;
  control_demand: number;
  pinned_quadrant?: Quadrant;
  delta_w?: number;
  overrides?: OverrideDoc[];
}

export interface PortfolioDoc {
  schedule?: string[];
  clic?: { isolation_threshold: number; control_threshold: number };
  workloads: WorkloadDoc[];
}

export interface Move {
  workload_id: string;
  window: string;
  target_quadrant: Quadrant;
}
