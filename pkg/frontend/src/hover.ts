/**
 * Coordinated hover highlighting: one pure mapping from the hovered element
 * to everything that should light up orange elsewhere.
 */
import { SimulationReport } from "./report.js";

export type HoverTarget =
  | { kind: "none" }
  | { kind: "wire"; wire: number }
  | { kind: "state-vector"; layer: number }
  | { kind: "reduced-state"; layer: number; wire: number }
  | { kind: "half-matrix-cell"; i: number; j: number };

export interface TooltipSpec {
  pair: [number, number];
  lines: string[];
  /** elements the curved callout arrows point at, as data-metric names */
  callouts: string[];
}

export interface HighlightSet {
  wires: number[];
  /** bit positions (= wire indices) to highlight inside every bitstring */
  bitPositions: number[];
  /** gap before this layer record gets the vertical orange segment */
  layerGap: number | null;
  tooltip: TooltipSpec | null;
}

const NOTHING: HighlightSet = { wires: [], bitPositions: [], layerGap: null, tooltip: null };

export function hoverHighlights(
  target: HoverTarget,
  report: SimulationReport | null,
): HighlightSet {
  switch (target.kind) {
    case "none":
      return NOTHING;
    case "wire":
      return { ...NOTHING, bitPositions: [target.wire] };
    case "state-vector":
      return { ...NOTHING, layerGap: target.layer };
    case "reduced-state":
      return { ...NOTHING, layerGap: target.layer, wires: [target.wire] };
    case "half-matrix-cell": {
      const [i, j] = [Math.min(target.i, target.j), Math.max(target.i, target.j)];
      const cell = report?.half_matrix?.cells.find(
        (c) => c.wires[0] === i && c.wires[1] === j);
      const tooltip: TooltipSpec | null = cell
        ? {
            pair: [i, j],
            lines: [
              `qubits ${i} and ${j}`,
              `correlation ${cell.correlation.toFixed(3)}`,
              `concurrence ${cell.concurrence.toFixed(3)}`,
            ],
            callouts: ["correlation", "concurrence"],
          }
        : null;
      return { wires: [i, j], bitPositions: [], layerGap: null, tooltip };
    }
  }
}
