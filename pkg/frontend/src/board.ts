/**
 * Quadrant board: the isolation/control plane with CLIC lines and one
 * draggable marker per workload.
 *
 * The quadrant a marker sits in always comes from the service's placement
 * for the selected window; geometry here only decides pixel positions.
 * Dropping a marker into a cell emits a move for that cell (the drag snaps
 * to the cell, so a visual move is always a semantic move).
 */

import type { BoardState } from "./state.js";
import type { Move, PlacementPayload, Quadrant, WorkloadDoc } from "./types.js";

const SIZE = 600;
const MARGIN = 46;
const PLOT = SIZE - 2 * MARGIN;

const GROUP_COLORS = ["#3366cc", "#dc3912", "#ff9900", "#109618", "#990099", "#0099c6"];

export interface BoardHandlers {
  onMove(move: Move): void;
  onSelect?(workloadId: string | null): void;
}

function toPixelX(isolation: number): number {
  return MARGIN + isolation * PLOT;
}

function toPixelY(control: number): number {
  return MARGIN + (1 - control) * PLOT;
}

/** Cell of the plane a (isolation, control) point falls in; boundaries count high. */
export function cellAt(isolation: number, control: number, isoThreshold: number, ctlThreshold: number): Quadrant {
  const highIso = isolation >= isoThreshold;
  const highCtl = control >= ctlThreshold;
  if (highIso && highCtl) return "Q2";
  if (highCtl) return "Q1";
  if (highIso) return "Q4";
  return "Q3";
}

/** Representative demand coordinates of a cell (midpoint of its demand ranges). */
export function cellMidpoint(
  quadrant: Quadrant,
  isoThreshold: number,
  ctlThreshold: number,
): { isolation: number; control: number } {
  const lowIso = isoThreshold / 2;
  const highIso = (1 + isoThreshold) / 2;
  const lowCtl = ctlThreshold / 2;
  const highCtl = (1 + ctlThreshold) / 2;
  switch (quadrant) {
    case "Q1":
      return { isolation: lowIso, control: highCtl };
    case "Q2":
      return { isolation: highIso, control: highCtl };
    case "Q4":
      return { isolation: highIso, control: lowCtl };
    default:
      return { isolation: lowIso, control: lowCtl };
  }
}

interface MarkerModel {
  workload: WorkloadDoc;
  industry: string;
  quadrant: Quadrant;
  isolation: number;
  control: number;
  color: string;
}

function servicePlacements(state: BoardState): Map<string, Quadrant> {
  const placed = new Map<string, Quadrant>();
  if (!state.report) return placed;
  for (const group of state.report.groups) {
    for (const placement of group.placements as PlacementPayload[]) {
      const windowPlacement = placement.windows.find((w) => w.window === state.selectedWindow);
      if (windowPlacement) placed.set(placement.workload_id, windowPlacement.quadrant);
    }
  }
  return placed;
}

function markerModels(state: BoardState): MarkerModel[] {
  if (!state.portfolio || !state.report) return [];
  const clic = state.portfolio.clic ?? { isolation_threshold: 0.5, control_threshold: 0.5 };
  const placements = servicePlacements(state);
  const industries = [...new Set(state.portfolio.workloads.map((w) => w.industry))];
  const markers: MarkerModel[] = [];
  for (const workload of state.portfolio.workloads) {
    const quadrant = placements.get(workload.id);
    if (!quadrant) continue; // not evaluated yet
    const override = (workload.overrides ?? []).find((o) => o.window === state.selectedWindow);
    let isolation = override?.isolation_demand ?? workload.isolation_demand;
    let control = override?.control_demand ?? workload.control_demand;
    // a pinned placement can live in a different cell than the demands point
    // at; snap the marker into the authoritative cell
    if (cellAt(isolation, control, clic.isolation_threshold, clic.control_threshold) !== quadrant) {
      const midpoint = cellMidpoint(quadrant, clic.isolation_threshold, clic.control_threshold);
      isolation = midpoint.isolation;
      control = midpoint.control;
    }
    markers.push({
      workload,
      industry: workload.industry,
      quadrant,
      isolation,
      control,
      color: GROUP_COLORS[industries.indexOf(workload.industry) % GROUP_COLORS.length],
    });
  }
  return markers;
}

const CELL_LABELS: Record<Quadrant, string> = {
  Q1: "Q1 · hosted private",
  Q2: "Q2 · on-prem / dedicated",
  Q3: "Q3 · public shared",
  Q4: "Q4 · public dedicated",
};

function svgEl(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, String(value));
  return el;
}

export function renderBoard(container: HTMLElement, state: BoardState, handlers: BoardHandlers): void {
  container.textContent = "";
  const clic = state.portfolio?.clic ?? { isolation_threshold: 0.5, control_threshold: 0.5 };
  const svg = svgEl("svg", {
    viewBox: `0 0 ${SIZE} ${SIZE}`,
    width: "100%",
    class: "board-svg",
    role: "img",
  }) as SVGSVGElement;

  const clicX = toPixelX(clic.isolation_threshold);
  const clicY = toPixelY(clic.control_threshold);

  // quadrant cells (Q2 tinted: it sits right of the CLIC)
  const cells: [Quadrant, number, number, number, number][] = [
    ["Q1", MARGIN, MARGIN, clicX - MARGIN, clicY - MARGIN],
    ["Q2", clicX, MARGIN, MARGIN + PLOT - clicX, clicY - MARGIN],
    ["Q3", MARGIN, clicY, clicX - MARGIN, MARGIN + PLOT - clicY],
    ["Q4", clicX, clicY, MARGIN + PLOT - clicX, MARGIN + PLOT - clicY],
  ];
  for (const [quadrant, x, y, width, height] of cells) {
    const cell = svgEl("rect", {
      x, y, width, height,
      class: `cell cell-${quadrant.toLowerCase()}`,
      "data-quadrant": quadrant,
      fill: quadrant === "Q2" ? "#fdf2e3" : "#f7f9fc",
      stroke: "none",
    });
    svg.appendChild(cell);
    svg.appendChild(
      Object.assign(svgEl("text", {
        x: x + 10, y: y + 20,
        class: "cell-label",
        "font-size": 13,
        fill: "#8892a0",
      }), { textContent: CELL_LABELS[quadrant] }),
    );
  }

  // frame and CLIC lines
  svg.appendChild(svgEl("rect", {
    x: MARGIN, y: MARGIN, width: PLOT, height: PLOT,
    fill: "none", stroke: "#444", "stroke-width": 1,
  }));
  svg.appendChild(svgEl("line", {
    x1: clicX, y1: MARGIN, x2: clicX, y2: MARGIN + PLOT,
    class: "clic-line", stroke: "#c0392b", "stroke-width": 2, "stroke-dasharray": "7 4",
  }));
  svg.appendChild(svgEl("line", {
    x1: MARGIN, y1: clicY, x2: MARGIN + PLOT, y2: clicY,
    class: "clic-line", stroke: "#c0392b", "stroke-width": 2, "stroke-dasharray": "7 4",
  }));

  // axis labels
  svg.appendChild(Object.assign(svgEl("text", {
    x: MARGIN + PLOT / 2, y: SIZE - 10, "text-anchor": "middle", class: "axis-label", "font-size": 14,
  }), { textContent: "isolation demand →" }));
  const yLabel = Object.assign(svgEl("text", {
    x: 14, y: MARGIN + PLOT / 2, "text-anchor": "middle", class: "axis-label", "font-size": 14,
  }), { textContent: "architectural control →" });
  yLabel.setAttribute("transform", `rotate(-90 14 ${MARGIN + PLOT / 2})`);
  svg.appendChild(yLabel);

  // workload markers
  for (const marker of markerModels(state)) {
    const cx = toPixelX(marker.isolation);
    const cy = toPixelY(marker.control);
    const group = svgEl("g", {
      class: "marker",
      "data-workload": marker.workload.id,
      "data-quadrant": marker.quadrant,
      "data-industry": marker.industry,
    });
    const circle = svgEl("circle", {
      cx, cy, r: 11, fill: marker.color, stroke: "#202020", "stroke-width": 1, cursor: "grab",
    });
    group.appendChild(circle);
    group.appendChild(Object.assign(svgEl("text", {
      x: cx, y: cy - 15, "text-anchor": "middle", "font-size": 12, class: "marker-label",
    }), { textContent: marker.workload.id }));
    attachDrag(svg, group, circle as SVGCircleElement, marker, state, handlers);
    svg.appendChild(group);
  }

  container.appendChild(svg);
}

function attachDrag(
  svg: SVGSVGElement,
  group: SVGElement,
  circle: SVGCircleElement,
  marker: MarkerModel,
  state: BoardState,
  handlers: BoardHandlers,
): void {
  let dragging = false;

  const toPlane = (event: PointerEvent) => {
    const rect = svg.getBoundingClientRect();
    const scale = rect.width > 0 ? SIZE / rect.width : 1;
    const x = (event.clientX - rect.left) * scale;
    const y = (event.clientY - rect.top) * scale;
    return {
      isolation: Math.min(1, Math.max(0, (x - MARGIN) / PLOT)),
      control: Math.min(1, Math.max(0, 1 - (y - MARGIN) / PLOT)),
    };
  };

  group.addEventListener("pointerdown", (event) => {
    dragging = true;
    handlers.onSelect?.(marker.workload.id);
    (event.target as Element).setPointerCapture?.((event as PointerEvent).pointerId);
    event.preventDefault();
  });
  group.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    const point = toPlane(event as PointerEvent);
    circle.setAttribute("cx", String(toPixelX(point.isolation)));
    circle.setAttribute("cy", String(toPixelY(point.control)));
  });
  group.addEventListener("pointerup", (event) => {
    if (!dragging) return;
    dragging = false;
    const clic = state.portfolio?.clic ?? { isolation_threshold: 0.5, control_threshold: 0.5 };
    const point = toPlane(event as PointerEvent);
    const target = cellAt(point.isolation, point.control, clic.isolation_threshold, clic.control_threshold);
    handlers.onMove({
      workload_id: marker.workload.id,
      window: state.selectedWindow,
      target_quadrant: target,
    });
  });
}
