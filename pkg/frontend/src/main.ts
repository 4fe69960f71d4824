/**
 * Browser entry point: owns the DOM, the URL, and the simulation queue.
 * Everything it renders comes from pure builders in views.ts; everything it
 * computes comes from the SimulationReport.
 */
import { gridText } from "./circuitGrid.js";
import {
  circuitText,
  EditorAction,
  EditorState,
  initialState,
  reduce,
} from "./editor.js";
import { HoverTarget, hoverHighlights } from "./hover.js";
import { SimulationReport } from "./report.js";
import { HttpSimulator, SimulationQueue } from "./simulator.js";
import {
  readCircuitFromLocation,
  writeCircuitToLocation,
} from "./urlState.js";
import { toDom } from "./vdom.js";
import {
  bitstringKeyView,
  circuitView,
  halfMatrixView,
  stateVectorsView,
  toolbarView,
  tooltipView,
} from "./views.js";

const DEFAULT_CIRCUIT = '{"wires":4,"cols":[["H","-","-","-"],["C","X","-","-"],["-","C","X","-"],["-","-","C","X"]]}';

let state: EditorState;
let report: SimulationReport | null = null;

const queue = new SimulationQueue(
  new HttpSimulator(),
  (r) => {
    report = r;
    // adopt the simulator's canonical echo so URL and memory never diverge
    if (r.circuit !== circuitText(state)) {
      state = { ...state, grid: JSON.parse(r.circuit) };
      writeCircuitToLocation(r.circuit, false);
    }
    hideBanner();
    render();
  },
  (message) => showBanner(message),
);

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function showBanner(message: string): void {
  const banner = el("banner");
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function hideBanner(): void {
  el("banner").classList.add("hidden");
}

function flashRejection(reason: string): void {
  const banner = el("banner");
  banner.textContent = reason;
  banner.classList.remove("hidden");
  setTimeout(() => banner.classList.add("hidden"), 900);
}

function dispatch(action: EditorAction, debounced = false): void {
  const transition = reduce(state, action);
  state = transition.state;
  if (transition.rejected) {
    flashRejection(transition.rejected);
    return;
  }
  if (transition.circuitChanged) {
    const text = circuitText(state);
    writeCircuitToLocation(text, true);
    if (debounced) queue.request(text, state.options);
    else queue.requestNow(text, state.options);
  }
  render();
}

function render(): void {
  const circuitHost = el("circuit-host");
  circuitHost.replaceChildren(toDom(circuitView(state.grid), document));
  const layersHost = el("layers-host");
  const keyHost = el("key-host");
  const hmHost = el("half-matrix-host");
  if (report) {
    layersHost.replaceChildren(toDom(stateVectorsView(report, state.options), document));
    keyHost.replaceChildren(
      toDom(bitstringKeyView(report.num_qubits, report.layout_k), document));
    hmHost.replaceChildren(
      report.half_matrix
        ? toDom(halfMatrixView(report.half_matrix), document)
        : document.createTextNode("half-matrix needs at least 2 qubits"));
  }
  applyHover();
}

function applyHover(): void {
  const highlights = hoverHighlights(state.hover, report);
  document.querySelectorAll(".orange").forEach((node) => node.classList.remove("orange"));
  for (const wire of highlights.wires) {
    document
      .querySelectorAll(`[data-wire="${wire}"]`)
      .forEach((node) => node.classList.add("orange"));
  }
  for (const bit of highlights.bitPositions) {
    document
      .querySelectorAll(`.bit[data-bit-wire="${bit}"]`)
      .forEach((node) => node.classList.add("orange"));
  }
  if (highlights.layerGap !== null) {
    document
      .querySelectorAll(`.circuit-gap[data-gap="${highlights.layerGap}"]`)
      .forEach((node) => node.classList.add("orange"));
  }
  const host = el("tooltip-host");
  if (highlights.tooltip) {
    host.replaceChildren(toDom(tooltipView(highlights.tooltip), document));
    const cell = document.querySelector(
      `.hm-cell[data-i="${highlights.tooltip.pair[0]}"][data-j="${highlights.tooltip.pair[1]}"]`);
    if (cell) {
      const rect = cell.getBoundingClientRect();
      const tip = host.firstElementChild as HTMLElement;
      tip.style.left = `${rect.right + window.scrollX + 10}px`;
      tip.style.top = `${rect.top + window.scrollY - 10}px`;
    }
  } else {
    host.replaceChildren();
  }
}

function hover(target: HoverTarget): void {
  dispatch({ type: "hover", target });
}

// -- parameter dragging -------------------------------------------------------

interface ParamDrag {
  wire: number;
  col: number;
  startY: number;
  startValue: number;
  rest: number[];
}

let paramDrag: ParamDrag | null = null;

function beginParamDrag(event: PointerEvent, wire: number, col: number): void {
  const token = state.grid.cols[col]?.[wire] ?? "-";
  const open = token.indexOf("(");
  if (open < 0) return;
  const args = token.slice(open + 1, -1).split(",").map(Number);
  if (args.some(Number.isNaN)) return;
  paramDrag = { wire, col, startY: event.clientY, startValue: args[args.length - 1],
                rest: args.slice(0, -1) };
  event.preventDefault();
}

function moveParamDrag(event: PointerEvent): void {
  if (!paramDrag) return;
  const delta = (paramDrag.startY - event.clientY) * 0.01;
  const params = [...paramDrag.rest, paramDrag.startValue + delta];
  dispatch({ type: "set-params", wire: paramDrag.wire, col: paramDrag.col, params }, true);
}

// -- event wiring ---------------------------------------------------------------

function cellCoords(node: Element): { wire: number; col: number } | null {
  const cell = node.closest(".circuit-cell");
  if (!cell) return null;
  return {
    wire: Number(cell.getAttribute("data-wire")),
    col: Number(cell.getAttribute("data-col")),
  };
}

function wireEvents(): void {
  const toolbar = el("toolbar-host");
  toolbar.replaceChildren(toDom(toolbarView(), document));
  toolbar.addEventListener("dragstart", (event) => {
    const chip = (event.target as Element).closest(".chip");
    if (chip && event instanceof DragEvent && event.dataTransfer) {
      event.dataTransfer.setData("text/plain", chip.getAttribute("data-token") ?? "");
    }
  });

  const circuitHost = el("circuit-host");
  circuitHost.addEventListener("dragover", (event) => {
    if ((event.target as Element).closest(".circuit-cell")) event.preventDefault();
  });
  circuitHost.addEventListener("drop", (event) => {
    const coords = cellCoords(event.target as Element);
    const token = (event as DragEvent).dataTransfer?.getData("text/plain");
    if (coords && token) {
      event.preventDefault();
      dispatch({ type: "drop", token, wire: coords.wire, col: coords.col });
    }
  });
  circuitHost.addEventListener("click", (event) => {
    const coords = cellCoords(event.target as Element);
    if (coords && (event.target as Element).closest(".circuit-cell--occupied")) {
      dispatch({ type: "remove", wire: coords.wire, col: coords.col });
    }
  });
  circuitHost.addEventListener("pointerdown", (event) => {
    const coords = cellCoords(event.target as Element);
    if (coords && (event.target as Element).closest(".gate-chip")) {
      beginParamDrag(event as PointerEvent, coords.wire, coords.col);
    }
  });
  window.addEventListener("pointermove", (event) => moveParamDrag(event as PointerEvent));
  window.addEventListener("pointerup", () => { paramDrag = null; });

  // coordinated hover highlighting
  document.addEventListener("mouseover", (event) => {
    const target = event.target as Element;
    const hmCell = target.closest(".hm-cell");
    if (hmCell) {
      hover({
        kind: "half-matrix-cell",
        i: Number(hmCell.getAttribute("data-i")),
        j: Number(hmCell.getAttribute("data-j")),
      });
      return;
    }
    const stat = target.closest(".qubit-stat");
    if (stat) {
      hover({
        kind: "reduced-state",
        layer: Number(stat.getAttribute("data-layer")),
        wire: Number(stat.getAttribute("data-wire")),
      });
      return;
    }
    const grid = target.closest(".sv-grid");
    if (grid) {
      hover({ kind: "state-vector", layer: Number(grid.getAttribute("data-layer")) });
      return;
    }
    const wireLabel = target.closest(".wire-label");
    if (wireLabel) {
      hover({ kind: "wire", wire: Number(wireLabel.getAttribute("data-wire")) });
      return;
    }
    if (state.hover.kind !== "none") hover({ kind: "none" });
  });

  // display options
  (el("opt-bars") as HTMLSelectElement).addEventListener("change", (event) => {
    dispatch({ type: "options",
               options: { bars: (event.target as HTMLSelectElement).value as never } });
    resimulate();
  });
  (el("opt-decades") as HTMLInputElement).addEventListener("change", (event) => {
    dispatch({ type: "options",
               options: { decades: Number((event.target as HTMLInputElement).value) } });
    resimulate();
  });
  (el("opt-layout") as HTMLInputElement).addEventListener("change", (event) => {
    const raw = (event.target as HTMLInputElement).value;
    dispatch({ type: "options", options: { layoutK: raw === "" ? null : Number(raw) } });
    resimulate();
  });
  (el("opt-show-sv") as HTMLInputElement).addEventListener("change", (event) => {
    dispatch({ type: "options",
               options: { showStateVectors: (event.target as HTMLInputElement).checked } });
  });
  (el("opt-show-rs") as HTMLInputElement).addEventListener("change", (event) => {
    dispatch({ type: "options",
               options: { showReducedStates: (event.target as HTMLInputElement).checked } });
  });
  (el("opt-wires") as HTMLInputElement).addEventListener("change", (event) => {
    dispatch({ type: "set-wires", wires: Number((event.target as HTMLInputElement).value) });
  });

  window.addEventListener("popstate", () => {
    const text = readCircuitFromLocation();
    if (text) {
      try {
        const transition = reduce(state, { type: "load", text });
        state = transition.state;
        queue.requestNow(circuitText(state), state.options);
        render();
      } catch (error) {
        showBanner(String(error));
      }
    }
  });
}

function resimulate(): void {
  queue.requestNow(circuitText(state), state.options);
}

function boot(): void {
  const fromUrl = readCircuitFromLocation();
  try {
    state = initialState(fromUrl);
  } catch (error) {
    showBanner(`could not load circuit from URL: ${String(error)}`);
    state = initialState(null);
  }
  if (fromUrl === null) {
    state = initialState(DEFAULT_CIRCUIT);
  }
  writeCircuitToLocation(gridText(state.grid), false);
  wireEvents();
  render();
  resimulate();
}

boot();
