/** Thin HTTP client for the planning service. No model arithmetic lives here. */

import type { EvaluationPayload, Move, PortfolioDoc, WhatIfPayload } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

export class PlanClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let message = `service responded ${response.status}`;
      try {
        const payload = await response.json();
        if (payload?.error?.message) message = payload.error.message;
      } catch {
        // keep the status-based message
      }
      throw new ServiceError(message, response.status);
    }
    return (await response.json()) as T;
  }

  evaluate(portfolio: PortfolioDoc, y: number): Promise<EvaluationPayload> {
    return this.post<EvaluationPayload>("/api/v1/evaluate", { portfolio, y });
  }

  whatIf(portfolio: PortfolioDoc, moves: Move[], y: number): Promise<WhatIfPayload> {
    return this.post<WhatIfPayload>("/api/v1/whatif", { portfolio, moves, y });
  }
}
