/**
 * Pure view builders: report data in, virtual nodes out. Interactions are
 * wired up by main.ts through data- attributes and event delegation, so
 * everything here is testable without a DOM.
 */
import { CircuitGrid, EMPTY } from "./circuitGrid.js";
import { DisplayOptions } from "./editor.js";
import {
  HalfMatrix,
  LayerAnnotation,
  LayerRecord,
  QubitStats,
  SimulationReport,
  barLength,
} from "./report.js";
import { TooltipSpec } from "./hover.js";
import { h, VNode } from "./vdom.js";

// cell geometry; keep in sync with styles.css
export const CELL_W = 116;
export const CELL_H = 36;

const TOOLBAR_CHIPS: { token: string; label: string }[] = [
  { token: "H", label: "H" },
  { token: "X", label: "X" },
  { token: "Y", label: "Y" },
  { token: "Z", label: "Z" },
  { token: "S", label: "S" },
  { token: "Sdg", label: "S†" },
  { token: "T", label: "T" },
  { token: "Tdg", label: "T†" },
  { token: "C", label: "●" },
  { token: "A", label: "○" },
  { token: "SWAP", label: "⨯⨯" },
  { token: "Z^(0.5)", label: "Z^k" },
  { token: "P(1.5707963267948966)", label: "P" },
  { token: "GP(1.5707963267948966)", label: "GP" },
  { token: "ZG(0,1.5707963267948966)", label: "ZG" },
  { token: "YG(0,1.5707963267948966)", label: "YG" },
  { token: "HG(0,1.5707963267948966)", label: "HG" },
  { token: "SX", label: "√X" },
  { token: "SXdg", label: "√X†" },
  { token: "SY", label: "√Y" },
  { token: "SYdg", label: "√Y†" },
  { token: "X^(0.5)", label: "X^k" },
  { token: "Y^(0.5)", label: "Y^k" },
  { token: "RX(1.5707963267948966)", label: "RX" },
  { token: "RY(1.5707963267948966)", label: "RY" },
  { token: "RZ(1.5707963267948966)", label: "RZ" },
];

export function angleLabel(theta: number): string {
  const quarters = theta / (Math.PI / 4);
  const k = Math.round(quarters);
  if (Math.abs(quarters - k) < 1e-9 && k !== 0) {
    const sign = k < 0 ? "-" : "";
    const a = Math.abs(k);
    if (a % 4 === 0) return `${sign}${a === 4 ? "" : a / 4}π`;
    if (a % 2 === 0) return `${sign}${a === 2 ? "" : a / 2}π/2`;
    return `${sign}${a === 1 ? "" : a}π/4`;
  }
  return theta.toFixed(3);
}

export function bitstring(index: number, n: number): string {
  return index.toString(2).padStart(n, "0");
}

export function toolbarView(): VNode {
  return h(
    "div",
    { class: "toolbar" },
    TOOLBAR_CHIPS.map(({ token, label }) =>
      h("span", { class: "chip", draggable: "true", "data-token": token, title: token }, label),
    ),
  );
}

function tokenLabel(token: string): string {
  const chip = TOOLBAR_CHIPS.find((c) => c.token === token);
  if (chip && !token.includes("(")) return chip.label;
  if (token.includes("(")) {
    return token;
  }
  return token;
}

export function circuitView(grid: CircuitGrid): VNode {
  const cols = grid.cols.length;
  const rows: VNode[] = [];
  for (let w = 0; w < grid.wires; w++) {
    const cells: VNode[] = [
      h("span", { class: "wire-label", "data-wire": w }, `q${w}`),
    ];
    for (let c = 0; c <= cols; c++) {
      const token = c < cols ? grid.cols[c][w] : EMPTY;
      const extra = c === cols ? " circuit-cell--new" : "";
      let content: VNode | string = "";
      if (token === "C") content = h("span", { class: "dot dot--control" });
      else if (token === "A") content = h("span", { class: "dot dot--anti" });
      else if (token === "SWAP") content = h("span", { class: "swap-mark" }, "⨯");
      else if (token !== EMPTY) {
        content = h("span", { class: "gate-chip", title: token }, tokenLabel(token));
      }
      cells.push(
        h(
          "div",
          {
            class: `circuit-cell${extra}${token !== EMPTY ? " circuit-cell--occupied" : ""}`,
            "data-wire": w,
            "data-col": c,
          },
          content,
        ),
      );
    }
    rows.push(h("div", { class: "circuit-row", "data-wire": w }, cells));
  }
  // vertical connectors for columns that gang several wires together
  const connectors: VNode[] = [];
  for (let c = 0; c < cols; c++) {
    const used = grid.cols[c]
      .map((t, w) => (t !== EMPTY ? w : -1))
      .filter((w) => w >= 0);
    if (used.length > 1) {
      connectors.push(
        h("div", {
          class: "column-connector",
          "data-col": c,
          style: `--from:${Math.min(...used)};--to:${Math.max(...used)};--col:${c};`,
        }),
      );
    }
  }
  // hoverable gap markers: gap g sits before column g (the state after g layers)
  const gaps: VNode[] = [];
  for (let g = 0; g <= cols; g++) {
    gaps.push(h("div", {
      class: "circuit-gap",
      "data-gap": g,
      style: `--col:${g};`,
    }));
  }
  return h("div", { class: "circuit", style: `--cols:${cols + 1};` }, rows, connectors, gaps);
}

function fillsFromAnnotation(annotation: LayerAnnotation | null): Map<number, string> {
  const fills = new Map<number, string>();
  if (!annotation) return fills;
  if (annotation.kind === "rotation") {
    for (const i of annotation.subset) fills.set(i, "fill-odd");
  } else if (annotation.kind === "dual_rotation" || annotation.kind === "butterfly") {
    for (const i of annotation.even) fills.set(i, "fill-even");
    for (const i of annotation.odd) fills.set(i, "fill-odd");
  } else {
    for (const [a, b] of annotation.pairs) {
      fills.set(a, "fill-even");
      fills.set(b, "fill-odd");
    }
  }
  return fills;
}

function badgesFromAnnotation(annotation: LayerAnnotation | null): Map<number, string> {
  const badges = new Map<number, string>();
  if (annotation?.kind === "butterfly") {
    for (const i of annotation.even) badges.set(i, "⊕");
    for (const i of annotation.odd) badges.set(i, "⊖");
  }
  return badges;
}

function discView(re: number, im: number): VNode {
  const phase = Math.atan2(im, re);
  const x2 = 8 + 6 * Math.cos(phase);
  const y2 = 8 - 6 * Math.sin(phase);
  return h(
    "svg",
    { class: "disc", width: 16, height: 16, viewBox: "0 0 16 16" },
    h("circle", { cx: 8, cy: 8, r: 6.5 }),
    h("line", { x1: 8, y1: 8, x2: x2.toFixed(2), y2: y2.toFixed(2) }),
  );
}

export function stateGridView(
  layer: LayerRecord,
  layerIndex: number,
  n: number,
  k: number,
  options: DisplayOptions,
): VNode {
  const fills = fillsFromAnnotation(layer.annotation);
  const badges = badgesFromAnnotation(layer.annotation);
  const cols = 1 << k;
  const rows = 1 << (n - k);
  const cells: VNode[] = [];
  for (let row = 0; row < rows; row++) {
    for (let col = 0; col < cols; col++) {
      const index = row * cols + col;
      const p = layer.probabilities[index];
      const [re, im] = layer.amplitudes[index];
      const fill = fills.get(index);
      const bits = bitstring(index, n);
      const bitSpans = [...bits].map((bit, pos) =>
        // left-most printed bit belongs to the bottom wire (n-1)
        h("span", { class: "bit", "data-bit-wire": n - 1 - pos }, bit),
      );
      const width = (barLength(p, options.bars, options.decades) * 100).toFixed(2);
      cells.push(
        h(
          "div",
          {
            class: `sv-cell${fill ? ` ${fill}` : ""}`,
            "data-index": index,
            "data-layer": layerIndex,
          },
          h("div", { class: "prob-bar", style: `width:${width}%;` }),
          h("span", { class: "prob-label" }, p.toFixed(4)),
          h("span", { class: "bits" }, bitSpans),
          p > 0 ? discView(re, im) : null,
          badges.has(index) ? h("span", { class: "badge" }, badges.get(index)!) : null,
        ),
      );
    }
  }
  return h(
    "div",
    { class: "sv-grid", style: `--sv-cols:${cols};`, "data-layer": layerIndex },
    cells,
    annotationOverlayView(layer.annotation, n, k),
  );
}

/** Arcs, exchange arrows, and swap arrows drawn over/beside the grid. */
export function annotationOverlayView(
  annotation: LayerAnnotation | null,
  n: number,
  k: number,
): VNode | null {
  if (!annotation) return null;
  const cols = 1 << k;
  const rows = 1 << (n - k);
  const width = cols * CELL_W + 64;
  const height = rows * CELL_H;
  const children: VNode[] = [];
  const rowCenter = (indices: number[]) => {
    const rs = indices.map((i) => Math.floor(i / cols));
    return ((Math.min(...rs) + Math.max(...rs) + 1) / 2) * CELL_H;
  };
  const arc = (yCenter: number, cssClass: string, angle: number) => {
    const x = cols * CELL_W + 8;
    const sweep = angle >= 0 ? 0 : 1;
    children.push(
      h("path", {
        class: `rotation-arc ${cssClass}`,
        d: `M ${x} ${(yCenter + 9).toFixed(2)} A 9 9 0 0 ${sweep} ${x} ${(yCenter - 9).toFixed(2)}`,
        "data-angle": angle.toFixed(6),
      }),
      h(
        "text",
        { class: `arc-label ${cssClass}`, x: x + 14, y: (yCenter + 4).toFixed(2) },
        angleLabel(angle),
      ),
    );
  };
  if (annotation.kind === "rotation") {
    arc(rowCenter(annotation.subset), "stroke-odd", annotation.angle);
  } else if (annotation.kind === "dual_rotation" || annotation.kind === "butterfly") {
    arc(rowCenter(annotation.even) - 7, "stroke-even", annotation.angle_even);
    arc(rowCenter(annotation.odd) + 7, "stroke-odd", annotation.angle_odd);
    if (annotation.kind === "dual_rotation" && annotation.exchange) {
      const x = cols * CELL_W + 40;
      children.push(
        h("line", {
          class: "exchange-arrow",
          x1: x,
          y1: rowCenter(annotation.even).toFixed(2),
          x2: x,
          y2: rowCenter(annotation.odd).toFixed(2),
          "marker-start": "url(#arrowhead)",
          "marker-end": "url(#arrowhead)",
        }),
      );
    }
  } else {
    for (const [a, b] of annotation.pairs) {
      const [ar, ac] = [Math.floor(a / cols), a % cols];
      const [br, bc] = [Math.floor(b / cols), b % cols];
      children.push(
        h("line", {
          class: `swap-arrow swap-${annotation.layout_class}`,
          x1: (ac * CELL_W + CELL_W / 2).toFixed(2),
          y1: (ar * CELL_H + CELL_H / 2).toFixed(2),
          x2: (bc * CELL_W + CELL_W / 2).toFixed(2),
          y2: (br * CELL_H + CELL_H / 2).toFixed(2),
          "marker-start": "url(#arrowhead)",
          "marker-end": "url(#arrowhead)",
        }),
      );
    }
  }
  return h(
    "svg",
    {
      class: "annotation-overlay",
      width,
      height,
      viewBox: `0 0 ${width} ${height}`,
    },
    h(
      "defs",
      {},
      h(
        "marker",
        {
          id: "arrowhead",
          markerWidth: 7,
          markerHeight: 7,
          refX: 3.5,
          refY: 3.5,
          orient: "auto-start-reverse",
        },
        h("path", { d: "M 0 0 L 7 3.5 L 0 7 z" }),
      ),
    ),
    children,
  );
}

export function qubitStatsView(stats: QubitStats[], layerIndex: number): VNode {
  return h(
    "div",
    { class: "qubit-stats", "data-layer": layerIndex },
    stats.map((s, wire) =>
      h(
        "div",
        { class: "qubit-stat", "data-layer": layerIndex, "data-wire": wire },
        h("span", { class: "stat-label" }, `q${wire}`),
        h(
          "div",
          { class: "stat-bars" },
          h("div", {
            class: "entropy-bar",
            title: `linear entropy ${s.linear_entropy.toFixed(4)}`,
            style: `width:${(s.linear_entropy * 100).toFixed(2)}%;`,
          }),
          h("div", {
            class: "entropy-bar",
            title: `von Neumann entropy ${s.von_neumann_entropy.toFixed(4)} bits`,
            style: `width:${(s.von_neumann_entropy * 100).toFixed(2)}%;`,
          }),
          h("div", {
            class: "prob-bar",
            title: `P(1) = ${s.prob_one.toFixed(4)}`,
            style: `width:${(s.prob_one * 100).toFixed(2)}%;`,
          }),
        ),
        s.phase !== null ? discView(Math.cos(s.phase), Math.sin(s.phase)) : null,
      ),
    ),
  );
}

export function layerBlockView(
  report: SimulationReport,
  layerIndex: number,
  options: DisplayOptions,
): VNode {
  const layer = report.layers[layerIndex];
  return h(
    "div",
    { class: "layer-block", "data-layer": layerIndex },
    h(
      "div",
      { class: "layer-title" },
      layerIndex === 0 ? "initial" : `after layer ${layerIndex - 1}`,
    ),
    options.showStateVectors
      ? stateGridView(layer, layerIndex, report.num_qubits, report.layout_k, options)
      : null,
    options.showReducedStates ? qubitStatsView(layer.qubit_stats, layerIndex) : null,
  );
}

export function stateVectorsView(report: SimulationReport, options: DisplayOptions): VNode {
  return h(
    "div",
    { class: "layers-strip" },
    report.layers.map((_, i) => layerBlockView(report, i, options)),
  );
}

export function halfMatrixView(hm: HalfMatrix): VNode {
  const cells = hm.cells.map((cell) => {
    const [i, j] = cell.wires;
    const corrWidth = (Math.abs(cell.correlation) * 100).toFixed(2);
    return h(
      "div",
      {
        class: "hm-cell",
        "data-i": i,
        "data-j": j,
        style: `grid-column:${i + 1};grid-row:${j};`,
      },
      h("span", { class: "hm-pair" }, `${i},${j}`),
      h("div", {
        class: `hm-bar ${cell.correlation < 0 ? "hm-bar--neg" : "hm-bar--pos"}`,
        "data-metric": "correlation",
        style: `width:${corrWidth}%;`,
        title: `correlation ${cell.correlation.toFixed(3)}`,
      }),
      h("div", {
        class: "hm-bar hm-bar--pos",
        "data-metric": "concurrence",
        style: `width:${(cell.concurrence * 100).toFixed(2)}%;`,
        title: `concurrence ${cell.concurrence.toFixed(3)}`,
      }),
      h("div", {
        class: "hm-bar hm-bar--grey",
        "data-metric": "linear_entropy",
        style: `width:${(cell.linear_entropy * 100).toFixed(2)}%;`,
        title: `pair linear entropy ${cell.linear_entropy.toFixed(3)}`,
      }),
      h("div", {
        class: "hm-bar hm-bar--grey",
        "data-metric": "von_neumann_entropy",
        style: `width:${((cell.von_neumann_entropy / 2) * 100).toFixed(2)}%;`,
        title: `pair von Neumann entropy ${cell.von_neumann_entropy.toFixed(3)} bits`,
      }),
    );
  });
  return h(
    "div",
    { class: "half-matrix", style: `--hm-cols:${hm.num_qubits - 1};` },
    cells,
  );
}

/** Tooltip with curved callout arrows pointing at the cell's metric bars. */
export function tooltipView(spec: TooltipSpec): VNode {
  const lines = spec.lines.map((line) => h("div", { class: "tooltip-line" }, line));
  const callouts = spec.callouts.map((metric, index) =>
    h("path", {
      class: "callout-arrow",
      "data-target-metric": metric,
      d: `M 4 ${12 + index * 16} C 40 ${12 + index * 16}, 40 ${40 + index * 26}, 72 ${40 + index * 26}`,
      "marker-end": "url(#callout-head)",
    }),
  );
  return h(
    "div",
    { class: "tooltip", "data-pair": `${spec.pair[0]},${spec.pair[1]}` },
    h("div", { class: "tooltip-box" }, lines),
    h(
      "svg",
      { class: "tooltip-callouts", width: 80, height: 96, viewBox: "0 0 80 96" },
      h(
        "defs",
        {},
        h(
          "marker",
          { id: "callout-head", markerWidth: 6, markerHeight: 6, refX: 3, refY: 3, orient: "auto" },
          h("path", { d: "M 0 0 L 6 3 L 0 6 z" }),
        ),
      ),
      callouts,
    ),
  );
}

/** Key of the wrapped grid's bitstrings (which cell is which basis state). */
export function bitstringKeyView(n: number, k: number): VNode {
  const cols = 1 << k;
  const rows = 1 << (n - k);
  const cells: VNode[] = [];
  for (let row = 0; row < rows; row++) {
    for (let col = 0; col < cols; col++) {
      const index = row * cols + col;
      const bits = bitstring(index, n);
      cells.push(
        h(
          "div",
          { class: "key-cell", "data-index": index },
          [...bits].map((bit, pos) =>
            h("span", { class: "bit", "data-bit-wire": n - 1 - pos }, bit),
          ),
        ),
      );
    }
  }
  return h("div", { class: "bitstring-key", style: `--sv-cols:${cols};` }, cells);
}
