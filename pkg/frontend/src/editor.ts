/**
 * Editor state: the circuit grid plus display options and the current hover
 * target. All transitions are pure; main.ts owns the DOM and the URL.
 */
import {
  applyDrop,
  CircuitGrid,
  EditResult,
  emptyGrid,
  gridText,
  parseGrid,
  removeToken,
  setTokenParams,
  setWireCount,
} from "./circuitGrid.js";
import { BarMode } from "./report.js";
import { HoverTarget } from "./hover.js";

export interface DisplayOptions {
  bars: BarMode;
  decades: number;
  layoutK: number | null; // null = simulator default
  showStateVectors: boolean;
  showReducedStates: boolean;
}

export interface EditorState {
  grid: CircuitGrid;
  options: DisplayOptions;
  hover: HoverTarget;
}

export const DEFAULT_OPTIONS: DisplayOptions = {
  bars: "probability",
  decades: 6,
  layoutK: null,
  showStateVectors: true,
  showReducedStates: true,
};

export function initialState(circuitText: string | null, wires = 4): EditorState {
  let grid: CircuitGrid;
  if (circuitText !== null) {
    grid = parseGrid(circuitText);
  } else {
    grid = emptyGrid(wires);
  }
  return { grid, options: { ...DEFAULT_OPTIONS }, hover: { kind: "none" } };
}

export function circuitText(state: EditorState): string {
  return gridText(state.grid);
}

export type EditorAction =
  | { type: "drop"; token: string; wire: number; col: number }
  | { type: "remove"; wire: number; col: number }
  | { type: "set-params"; wire: number; col: number; params: number[] }
  | { type: "set-wires"; wires: number }
  | { type: "load"; text: string }
  | { type: "options"; options: Partial<DisplayOptions> }
  | { type: "hover"; target: HoverTarget };

export interface Transition {
  state: EditorState;
  /** true when the circuit changed and needs re-simulation + a history push */
  circuitChanged: boolean;
  rejected?: string;
}

export function reduce(state: EditorState, action: EditorAction): Transition {
  switch (action.type) {
    case "drop":
      return applyGridEdit(state, applyDrop(state.grid, action.token, action.wire, action.col));
    case "remove":
      return applyGridEdit(state, removeToken(state.grid, action.wire, action.col));
    case "set-params":
      return applyGridEdit(
        state, setTokenParams(state.grid, action.wire, action.col, action.params));
    case "set-wires":
      return applyGridEdit(state, setWireCount(state.grid, action.wires));
    case "load": {
      const grid = parseGrid(action.text);
      return { state: { ...state, grid }, circuitChanged: true };
    }
    case "options":
      return {
        state: { ...state, options: { ...state.options, ...action.options } },
        circuitChanged: false,
      };
    case "hover":
      return { state: { ...state, hover: action.target }, circuitChanged: false };
  }
}

function applyGridEdit(state: EditorState, result: EditResult): Transition {
  if (!result.ok) {
    return { state, circuitChanged: false, rejected: result.reason };
  }
  return { state: { ...state, grid: result.grid }, circuitChanged: true };
}
