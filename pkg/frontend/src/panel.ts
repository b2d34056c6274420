/**
 * Metrics panel: window timeline, per-group H/Ê, what-if deltas, badges.
 *
 * Numbers are printed verbatim from the service payloads (String(value)),
 * never recomputed or reformatted arithmetically.
 */

import type { BoardState } from "./state.js";
import type { DeltaRowPayload, MoveOutcomePayload } from "./types.js";

export interface PanelHandlers {
  onSelectWindow(window: string): void;
  onReset(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderTimeline(root: HTMLElement, state: BoardState, handlers: PanelHandlers): void {
  const bar = el("div", "timeline");
  const schedule = state.report?.schedule ?? [];
  for (const window of schedule) {
    const button = el("button", "window-button", window);
    button.dataset.window = window;
    if (window === state.selectedWindow) button.classList.add("selected");
    button.disabled = schedule.length === 1;
    button.addEventListener("click", () => handlers.onSelectWindow(window));
    bar.appendChild(button);
  }
  root.appendChild(bar);
}

function renderGroups(root: HTMLElement, state: BoardState): void {
  if (!state.report) return;
  for (const group of state.report.groups) {
    const card = el("div", "group-card");
    card.dataset.industry = group.industry;
    const swatch = el("span", "group-swatch", "");
    card.appendChild(swatch);
    card.appendChild(el("span", "group-name", group.industry));
    const metrics = group.windows.find((w) => w.window === state.selectedWindow);
    if (metrics) {
      const h = el("span", "metric metric-h", `H = ${String(metrics.h_display)}`);
      h.dataset.value = String(metrics.h_display);
      card.appendChild(h);
      const effort = el("span", "metric metric-effort", `Ê = ${String(metrics.effort_pm)} PM`);
      effort.dataset.value = String(metrics.effort_pm);
      card.appendChild(effort);
      card.appendChild(el("span", "metric metric-counts",
        `counts ${metrics.counts.w1}/${metrics.counts.w2}/${metrics.counts.w3}/${metrics.counts.w4}`));
    }
    root.appendChild(card);
  }
  const totals = el("div", "totals");
  totals.appendChild(
    el("span", "metric metric-total-effort", `portfolio effort = ${String(state.report.totals.effort_pm)} PM`),
  );
  root.appendChild(totals);
}

function renderDeltas(root: HTMLElement, state: BoardState): void {
  const whatIf = state.lastWhatIf;
  if (!whatIf) return;
  const section = el("div", "delta-section");
  section.appendChild(el("h3", "", "what-if deltas"));
  const rows = whatIf.delta.h_by_group_window.filter(
    (row: DeltaRowPayload) => row.window === state.selectedWindow,
  );
  for (const row of rows) {
    const line = el("div", "delta-row");
    line.dataset.industry = row.industry;
    line.dataset.window = row.window;
    line.appendChild(el("span", "delta-h-before", String(row.before)));
    line.appendChild(el("span", "delta-arrow", "→"));
    line.appendChild(el("span", "delta-h-after", String(row.after)));
    const badge = el("span", "delta-badge", `ΔH ${String(row.delta)}`);
    if (row.delta === 0) badge.classList.add("delta-zero");
    line.appendChild(badge);
    section.appendChild(line);
  }
  const total = whatIf.delta.total_effort_pm;
  const effortLine = el("div", "delta-effort",
    `Ê ${String(total.before)} → ${String(total.after)} PM (Δ ${String(total.delta)})`);
  section.appendChild(effortLine);

  for (const move of whatIf.moves as MoveOutcomePayload[]) {
    const badge = el(
      "span",
      move.crossed_clic ? "move-badge clic-crossing" : "move-badge",
      `${move.workload_id}: ${move.quadrant_before} → ${move.target_quadrant}` +
        (move.crossed_clic ? " · crosses CLIC" : ""),
    );
    badge.dataset.workload = move.workload_id;
    badge.dataset.crossed = String(move.crossed_clic);
    section.appendChild(badge);
  }
  root.appendChild(section);
}

function renderWarnings(root: HTMLElement, state: BoardState): void {
  const warnings = [
    ...(state.report?.warnings ?? []),
    ...(state.lastWhatIf?.warnings ?? []),
  ];
  if (warnings.length === 0) return;
  const list = el("ul", "warnings");
  for (const warning of new Set(warnings)) list.appendChild(el("li", "warning", warning));
  root.appendChild(list);
}

export function renderPanel(container: HTMLElement, state: BoardState, handlers: PanelHandlers): void {
  container.textContent = "";
  renderTimeline(container, state, handlers);
  renderGroups(container, state);
  renderDeltas(container, state);
  renderWarnings(container, state);

  const resetButton = el("button", "reset-button", "reset to baseline");
  resetButton.disabled = !state.dirty;
  resetButton.addEventListener("click", () => handlers.onReset());
  container.appendChild(resetButton);

  if (state.toast) {
    const toast = el("div", "toast", state.toast);
    container.appendChild(toast);
  }
  if (state.inFlight) {
    container.appendChild(el("div", "busy", "evaluating…"));
  }
}
