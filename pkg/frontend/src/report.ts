/**
 * SimulationReport schema, exactly as produced by `qcdiff simulate`.
 * The UI performs no quantum math: every quantity it displays is read from
 * one of these documents (bar scaling and disc orientation are presentation
 * transforms of reported numbers).
 */

export type BarMode = "probability" | "magnitude" | "log";

export interface RotationAnnotation {
  kind: "rotation";
  color: "green" | "purple";
  subset: number[];
  angle: number;
  raw_angle: number;
}

export interface DualRotationAnnotation {
  kind: "dual_rotation";
  even: number[];
  odd: number[];
  angle_even: number;
  angle_odd: number;
  raw_angle_even: number;
  raw_angle_odd: number;
  exchange: boolean;
}

export interface ButterflyAnnotation {
  kind: "butterfly";
  even: number[];
  odd: number[];
  angle_even: number;
  angle_odd: number;
  raw_angle_even: number;
  raw_angle_odd: number;
}

export type SwapLayoutClass = "same_column" | "same_row" | "diagonal";

export interface SwapPairsAnnotation {
  kind: "swap_pairs";
  pairs: [number, number][];
  layout_class: SwapLayoutClass;
}

export type LayerAnnotation =
  | RotationAnnotation
  | DualRotationAnnotation
  | ButterflyAnnotation
  | SwapPairsAnnotation;

export interface QubitStats {
  prob_one: number;
  phase: number | null;
  purity: number;
  linear_entropy: number;
  von_neumann_entropy: number;
}

export interface LayerRecord {
  amplitudes: [number, number][];
  probabilities: number[];
  annotation: LayerAnnotation | null;
  qubit_stats: QubitStats[];
}

export interface HalfMatrixCell {
  wires: [number, number];
  correlation: number;
  concurrence: number;
  linear_entropy: number;
  von_neumann_entropy: number;
}

export interface HalfMatrix {
  num_qubits: number;
  cells: HalfMatrixCell[];
}

export interface SimulationReport {
  schema_version: string;
  circuit: string;
  num_qubits: number;
  layout_k: number;
  options: { bars: BarMode; decades: number };
  layers: LayerRecord[];
  half_matrix: HalfMatrix | null;
}

/** Bar length in [0, 1] for a reported probability (display scaling only). */
export function barLength(p: number, mode: BarMode, decades: number): number {
  const clamped = Math.min(Math.max(p, 0), 1);
  if (mode === "probability") return clamped;
  if (mode === "magnitude") return Math.sqrt(clamped);
  if (clamped === 0) return 0;
  return Math.max(0, 1 + Math.log10(clamped) / decades);
}
