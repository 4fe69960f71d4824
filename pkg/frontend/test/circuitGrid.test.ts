import { describe, expect, it } from "vitest";
import {
  applyDrop,
  emptyGrid,
  gridText,
  isGateToken,
  parseGrid,
  removeToken,
  setTokenParams,
  setWireCount,
} from "../src/circuitGrid.js";

describe("tokens", () => {
  it("accepts the full gate vocabulary", () => {
    for (const token of ["H", "X", "SWAP", "Sdg", "SXdg", "Z^(0.5)", "P(120deg)",
                         "GP(-1.5)", "ZG(0,3.14)", "RX(1e-3)", "Y^(-0.25)"]) {
      expect(isGateToken(token), token).toBe(true);
    }
  });

  it("rejects malformed tokens", () => {
    for (const token of ["Q", "P()", "P(abc)", "ZG(1)", "H(1)", "P(1,2)", ""]) {
      expect(isGateToken(token), token).toBe(false);
    }
  });
});

describe("parseGrid", () => {
  it("round-trips canonical text", () => {
    const text = '{"wires":2,"cols":[["C","X"],["-","H"]]}';
    expect(gridText(parseGrid(text))).toBe(text);
  });

  it("rejects ragged columns", () => {
    expect(() => parseGrid('{"wires":2,"cols":[["H"]]}')).toThrow(/exactly 2 tokens/);
  });

  it("rejects unknown tokens and bad wire counts", () => {
    expect(() => parseGrid('{"wires":1,"cols":[["Q"]]}')).toThrow(/unknown token/);
    expect(() => parseGrid('{"wires":0,"cols":[]}')).toThrow(/wires/);
    expect(() => parseGrid("not json")).toThrow(/JSON/);
  });
});

describe("applyDrop", () => {
  it("places a gate in a fresh column", () => {
    const result = applyDrop(emptyGrid(2), "H", 1, 0);
    expect(result.ok).toBe(true);
    if (result.ok) expect(gridText(result.grid)).toBe('{"wires":2,"cols":[["-","H"]]}');
  });

  it("rejects drops on occupied cells without changing the grid", () => {
    const first = applyDrop(emptyGrid(2), "H", 0, 0);
    if (!first.ok) throw new Error("setup failed");
    const second = applyDrop(first.grid, "X", 0, 0);
    expect(second).toEqual({ ok: false, reason: "cell occupied" });
    expect(gridText(first.grid)).toBe('{"wires":2,"cols":[["H","-"]]}');
  });

  it("adds a control only next to a gate", () => {
    const bare = applyDrop(emptyGrid(2), "C", 0, 0);
    expect(bare.ok).toBe(false);
    const withGate = applyDrop(emptyGrid(2), "X", 1, 0);
    if (!withGate.ok) throw new Error("setup failed");
    const controlled = applyDrop(withGate.grid, "C", 0, 0);
    expect(controlled.ok).toBe(true);
    if (controlled.ok) {
      expect(gridText(controlled.grid)).toBe('{"wires":2,"cols":[["C","X"]]}');
    }
  });

  it("places both SWAP halves together", () => {
    const result = applyDrop(emptyGrid(3), "SWAP", 1, 0);
    expect(result.ok).toBe(true);
    if (result.ok) {
      expect(result.grid.cols[0]).toEqual(["-", "SWAP", "SWAP"]);
    }
    expect(applyDrop(emptyGrid(3), "SWAP", 2, 0).ok).toBe(false);
  });

  it("rejects out-of-range positions", () => {
    expect(applyDrop(emptyGrid(2), "H", 2, 0).ok).toBe(false);
    expect(applyDrop(emptyGrid(2), "H", 0, 5).ok).toBe(false);
  });
});

describe("removeToken", () => {
  it("sweeps orphaned controls when the last gate leaves", () => {
    const grid = parseGrid('{"wires":2,"cols":[["C","X"]]}');
    const result = removeToken(grid, 1, 0);
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.grid.cols[0]).toEqual(["-", "-"]);
  });

  it("removes both SWAP halves", () => {
    const grid = parseGrid('{"wires":3,"cols":[["SWAP","-","SWAP"]]}');
    const result = removeToken(grid, 0, 0);
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.grid.cols[0]).toEqual(["-", "-", "-"]);
  });
});

describe("setTokenParams", () => {
  it("rewrites the parenthesized arguments", () => {
    const grid = parseGrid('{"wires":1,"cols":[["P(0.5)"]]}');
    const result = setTokenParams(grid, 0, 0, [1.25]);
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.grid.cols[0][0]).toBe("P(1.25)");
  });

  it("refuses parameterless tokens", () => {
    const grid = parseGrid('{"wires":1,"cols":[["H"]]}');
    expect(setTokenParams(grid, 0, 0, [1]).ok).toBe(false);
  });
});

describe("setWireCount", () => {
  it("pads new wires with empty cells", () => {
    const grid = parseGrid('{"wires":1,"cols":[["H"]]}');
    const result = setWireCount(grid, 3);
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.grid.cols[0]).toEqual(["H", "-", "-"]);
  });

  it("drops truncated SWAP halves and orphaned controls", () => {
    const grid = parseGrid('{"wires":3,"cols":[["C","SWAP","SWAP"],["-","C","X"]]}');
    const result = setWireCount(grid, 2);
    expect(result.ok).toBe(true);
    if (result.ok) {
      expect(result.grid.cols[0]).toEqual(["-", "-"]);
      expect(result.grid.cols[1]).toEqual(["-", "-"]);
    }
  });
});
