/** Bootstrap: wire the store to the board and panel against the live service. */

import { PlanClient } from "./api.js";
import { renderBoard } from "./board.js";
import { renderPanel } from "./panel.js";
import { BoardStore } from "./state.js";
import type { PlanService } from "./state.js";
import type { PortfolioDoc } from "./types.js";

export function mountApp(root: HTMLElement, client: PlanService, initialY = 0.2): BoardStore {
  const layout = document.createElement("div");
  layout.className = "layout";
  const boardHost = document.createElement("div");
  boardHost.className = "board-host";
  const panelHost = document.createElement("div");
  panelHost.className = "panel-host";
  layout.appendChild(boardHost);
  layout.appendChild(panelHost);
  root.appendChild(layout);

  const store = new BoardStore(client, initialY);
  const rerender = () => {
    const state = store.getState();
    renderBoard(boardHost, state, {
      onMove: (move) => store.queueMove(move),
    });
    renderPanel(panelHost, state, {
      onSelectWindow: (window) => store.selectWindow(window),
      onReset: () => store.reset(),
    });
  };
  store.subscribe(rerender);
  rerender();
  return store;
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  const client = new PlanClient("");
  const store = mountApp(root, client);

  const controls = document.getElementById("controls");
  if (controls) {
    const yInput = document.createElement("input");
    yInput.type = "number";
    yInput.step = "0.05";
    yInput.min = "0.05";
    yInput.max = "1";
    yInput.value = "0.2";
    yInput.title = "custom work complexity factor y";
    yInput.addEventListener("change", () => {
      store.setY(Number(yInput.value));
      const portfolio = store.getState().portfolio;
      if (portfolio) void store.load(portfolio);
    });
    const label = document.createElement("label");
    label.textContent = "y ";
    label.appendChild(yInput);
    controls.appendChild(label);

    const fileInput = document.createElement("input");
    fileInput.type = "file";
    fileInput.accept = "application/json";
    fileInput.addEventListener("change", async () => {
      const file = fileInput.files?.[0];
      if (!file) return;
      const doc = JSON.parse(await file.text()) as PortfolioDoc;
      await store.load(doc);
    });
    controls.appendChild(fileInput);
  }

  const response = await fetch("./sample.json");
  const sample = (await response.json()) as PortfolioDoc;
  await store.load(sample);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot();
}
