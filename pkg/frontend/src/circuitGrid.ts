/**
 * The editable token grid behind the circuit text format:
 *   {"wires": n, "cols": [[token, ...], ...]}   (one token per wire, top first)
 *
 * The grid is edited purely as tokens; the simulator owns all gate semantics.
 * `gridText` is byte-compatible with the canonical form the simulator echoes
 * back in report.circuit.
 */

export interface CircuitGrid {
  wires: number;
  cols: string[][];
}

export const EMPTY = "-";
export const CONTROL_TOKENS = ["C", "A"];

/** Tokens a gate chip can carry; parametric chips embed default angles. */
export const SIMPLE_GATE_TOKENS = [
  "H", "X", "Y", "Z", "S", "Sdg", "T", "Tdg",
  "SX", "SXdg", "SY", "SYdg",
];

const PARAM_TOKEN_RE = /^(Z\^|X\^|Y\^|GP|P|RX|RY|RZ|ZG|YG|HG)\((.*)\)$/;
const TWO_PARAM_PREFIXES = ["ZG", "YG", "HG"];
const NUMBER_RE = /^[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?(?:deg)?$/;

export function isGateToken(token: string): boolean {
  if (SIMPLE_GATE_TOKENS.includes(token) || token === "SWAP") return true;
  const match = PARAM_TOKEN_RE.exec(token);
  if (!match) return false;
  const args = match[2].split(",");
  const expected = TWO_PARAM_PREFIXES.includes(match[1]) ? 2 : 1;
  return args.length === expected && args.every((a) => NUMBER_RE.test(a.trim()));
}

export function isControlToken(token: string): boolean {
  return CONTROL_TOKENS.includes(token);
}

export function isValidToken(token: string): boolean {
  return token === EMPTY || isControlToken(token) || isGateToken(token);
}

export function emptyGrid(wires: number): CircuitGrid {
  return { wires, cols: [] };
}

export function cloneGrid(grid: CircuitGrid): CircuitGrid {
  return { wires: grid.wires, cols: grid.cols.map((col) => [...col]) };
}

/** Canonical circuit text (matches the simulator's canonical echo). */
export function gridText(grid: CircuitGrid): string {
  return JSON.stringify({ wires: grid.wires, cols: grid.cols });
}

/** Structural parse of circuit text; throws on malformed documents. */
export function parseGrid(text: string): CircuitGrid {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (e) {
    throw new Error(`circuit text is not valid JSON: ${(e as Error).message}`);
  }
  if (typeof doc !== "object" || doc === null) throw new Error("circuit must be an object");
  const { wires, cols } = doc as { wires?: unknown; cols?: unknown };
  if (typeof wires !== "number" || !Number.isInteger(wires) || wires < 1 || wires > 16) {
    throw new Error(`"wires" must be an integer in [1, 16]`);
  }
  if (!Array.isArray(cols)) throw new Error(`"cols" must be an array`);
  const parsed: string[][] = [];
  for (const col of cols) {
    if (!Array.isArray(col) || col.length !== wires) {
      throw new Error(`every column must list exactly ${wires} tokens`);
    }
    for (const token of col) {
      if (typeof token !== "string" || !isValidToken(token)) {
        throw new Error(`unknown token ${JSON.stringify(token)}`);
      }
    }
    parsed.push([...col] as string[]);
  }
  return { wires, cols: parsed };
}

function columnHasGate(col: string[]): boolean {
  return col.some((t) => isGateToken(t));
}

export type EditResult =
  | { ok: true; grid: CircuitGrid }
  | { ok: false; reason: string };

/**
 * Drop a toolbar token onto (wire, col). col may equal cols.length to start
 * a new column. Invalid drops report a reason and leave the grid untouched.
 */
export function applyDrop(
  grid: CircuitGrid,
  token: string,
  wire: number,
  col: number,
): EditResult {
  if (!isValidToken(token) || token === EMPTY) {
    return { ok: false, reason: `not a droppable token: ${token}` };
  }
  if (wire < 0 || wire >= grid.wires) return { ok: false, reason: "wire out of range" };
  if (col < 0 || col > grid.cols.length) return { ok: false, reason: "column out of range" };
  const next = cloneGrid(grid);
  if (col === next.cols.length) next.cols.push(new Array(next.wires).fill(EMPTY));
  const column = next.cols[col];

  if (token === "SWAP") {
    // a SWAP needs two halves; place them on this wire and the next
    if (wire + 1 >= next.wires) return { ok: false, reason: "SWAP needs two wires" };
    if (column[wire] !== EMPTY || column[wire + 1] !== EMPTY) {
      return { ok: false, reason: "cell occupied" };
    }
    if (column.includes("SWAP")) return { ok: false, reason: "column already has a SWAP" };
    column[wire] = "SWAP";
    column[wire + 1] = "SWAP";
    return { ok: true, grid: next };
  }
  if (column[wire] !== EMPTY) return { ok: false, reason: "cell occupied" };
  if (isControlToken(token) && !columnHasGate(column)) {
    return { ok: false, reason: "a control needs a gate in its column" };
  }
  column[wire] = token;
  return { ok: true, grid: next };
}

/** Clear a cell; SWAP halves leave together and orphaned controls are swept. */
export function removeToken(grid: CircuitGrid, wire: number, col: number): EditResult {
  if (col < 0 || col >= grid.cols.length) return { ok: false, reason: "column out of range" };
  if (wire < 0 || wire >= grid.wires) return { ok: false, reason: "wire out of range" };
  if (grid.cols[col][wire] === EMPTY) return { ok: false, reason: "cell already empty" };
  const next = cloneGrid(grid);
  const column = next.cols[col];
  if (column[wire] === "SWAP") {
    for (let w = 0; w < column.length; w++) if (column[w] === "SWAP") column[w] = EMPTY;
  } else {
    column[wire] = EMPTY;
  }
  if (!columnHasGate(column)) {
    for (let w = 0; w < column.length; w++) if (isControlToken(column[w])) column[w] = EMPTY;
  }
  return { ok: true, grid: next };
}

/** Replace the parenthesized arguments of a parametric token in place. */
export function setTokenParams(
  grid: CircuitGrid,
  wire: number,
  col: number,
  params: number[],
): EditResult {
  if (col < 0 || col >= grid.cols.length || wire < 0 || wire >= grid.wires) {
    return { ok: false, reason: "cell out of range" };
  }
  const token = grid.cols[col][wire];
  const open = token.indexOf("(");
  if (open < 0 || !token.endsWith(")")) return { ok: false, reason: "token has no parameters" };
  const replaced = `${token.slice(0, open)}(${params.map(String).join(",")})`;
  if (!isGateToken(replaced)) return { ok: false, reason: "bad parameter value" };
  const next = cloneGrid(grid);
  next.cols[col][wire] = replaced;
  return { ok: true, grid: next };
}

export function setWireCount(grid: CircuitGrid, wires: number): EditResult {
  if (!Number.isInteger(wires) || wires < 1 || wires > 16) {
    return { ok: false, reason: "wires must be in [1, 16]" };
  }
  const next: CircuitGrid = { wires, cols: [] };
  for (const col of grid.cols) {
    const trimmed = col.slice(0, wires);
    while (trimmed.length < wires) trimmed.push(EMPTY);
    // a truncated SWAP half or orphaned controls would make the column invalid
    if (trimmed.filter((t) => t === "SWAP").length === 1) {
      for (let w = 0; w < trimmed.length; w++) if (trimmed[w] === "SWAP") trimmed[w] = EMPTY;
    }
    if (!columnHasGate(trimmed)) {
      for (let w = 0; w < trimmed.length; w++) if (isControlToken(trimmed[w])) trimmed[w] = EMPTY;
    }
    next.cols.push(trimmed);
  }
  return { ok: true, grid: next };
}
