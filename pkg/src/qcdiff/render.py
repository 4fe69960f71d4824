"""Static SVG rendering of a simulation report: circuit diagram on top,
wrapped state-vector grids with difference highlighting below, per-qubit
stats and the half-matrix to the right.

Output is byte-deterministic for a fixed report: geometry is emitted with
fixed-precision decimals and all iteration orders are defined by the report.
"""
from __future__ import annotations

import json
import math
from math import pi

from .analytics import bar_length

MAX_RENDER_QUBITS = 8

CELL_W = 96
CELL_H = 26
GRID_GAP = 24
CIRCUIT_COL_W = 46
CIRCUIT_ROW_H = 34
MARGIN = 18

GREEN = "#3fa34d"
PURPLE = "#9063cd"
BLUE = "#3b6fd4"
GREY = "#8a8a8a"
RED = "#c0392b"

_STYLE = (
    "text{font-family:monospace;font-size:10px;fill:#222}"
    ".gate-box{fill:#fff;stroke:#222}"
    ".wire{stroke:#222;stroke-width:1}"
    ".cell{fill:none;stroke:#ccc;stroke-width:0.5}"
    ".cell-even{fill:#e7dcf5}"
    ".cell-odd{fill:#dcf0de}"
    ".prob-bar{fill:" + BLUE + "}"
    ".entropy-bar{fill:" + GREY + "}"
    ".disc{fill:#eef;stroke:#447}"
    ".tick{stroke:#447;stroke-width:1.2}"
    ".rotation-arc{fill:none;stroke-width:2}"
    ".exchange-arrow{stroke-width:1.5;fill:none}"
    ".swap-arrow{stroke:#333;stroke-width:1.5;fill:none}"
)


def _f(v: float) -> str:
    return f"{v:.2f}"


def _angle_label(theta: float) -> str:
    """Compact label: multiples of pi/4 print as fractions, else radians."""
    quarters = theta / (pi / 4)
    k = round(quarters)
    if abs(quarters - k) < 1e-9 and k != 0:
        sign = "-" if k < 0 else ""
        k = abs(k)
        if k % 4 == 0:
            mult = k // 4
            return f"{sign}{'' if mult == 1 else mult}π"
        if k % 2 == 0:
            mult = k // 2
            return f"{sign}{'' if mult == 1 else mult}π/2"
        return f"{sign}{'' if k == 1 else k}π/4"
    return f"{theta:.3f}"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


class _Svg:
    def __init__(self):
        self.parts: list[str] = []

    def add(self, fragment: str) -> None:
        self.parts.append(fragment)

    def rect(self, x, y, w, h, cls="", fill=None, extra=""):
        attrs = f' class="{cls}"' if cls else ""
        if fill:
            attrs += f' fill="{fill}"'
        self.add(f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(w)}" height="{_f(h)}"{attrs}{extra}/>')

    def line(self, x1, y1, x2, y2, cls="", stroke=None, extra=""):
        attrs = f' class="{cls}"' if cls else ""
        if stroke:
            attrs += f' stroke="{stroke}"'
        self.add(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"{attrs}{extra}/>')

    def text(self, x, y, s, cls="", anchor="start", extra=""):
        attrs = f' class="{cls}"' if cls else ""
        if anchor != "start":
            attrs += f' text-anchor="{anchor}"'
        self.add(f'<text x="{_f(x)}" y="{_f(y)}"{attrs}{extra}>{_esc(s)}</text>')

    def circle(self, cx, cy, r, cls="", fill=None, extra=""):
        attrs = f' class="{cls}"' if cls else ""
        if fill:
            attrs += f' fill="{fill}"'
        self.add(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}"{attrs}{extra}/>')


def _draw_circuit(svg: _Svg, circuit_doc: dict, x0: float, y0: float) -> float:
    wires = circuit_doc["wires"]
    cols = circuit_doc["cols"]
    width = max(len(cols), 1) * CIRCUIT_COL_W
    svg.add('<g class="circuit">')
    for w in range(wires):
        y = y0 + w * CIRCUIT_ROW_H
        svg.line(x0, y, x0 + width, y, cls="wire")
        svg.text(x0 - 14, y + 3, f"q{w}", anchor="end")
    for c, col in enumerate(cols):
        cx = x0 + c * CIRCUIT_COL_W + CIRCUIT_COL_W / 2
        used = [w for w, t in enumerate(col) if t != "-"]
        if len(used) > 1:
            svg.line(cx, y0 + min(used) * CIRCUIT_ROW_H, cx, y0 + max(used) * CIRCUIT_ROW_H,
                     cls="wire")
        for w, token in enumerate(col):
            cy = y0 + w * CIRCUIT_ROW_H
            if token == "-":
                continue
            if token == "C":
                svg.circle(cx, cy, 3.5, fill="#222")
            elif token == "A":
                svg.circle(cx, cy, 3.5, fill="#fff", extra=' stroke="#222"')
            elif token == "SWAP":
                svg.line(cx - 5, cy - 5, cx + 5, cy + 5, cls="wire")
                svg.line(cx - 5, cy + 5, cx + 5, cy - 5, cls="wire")
            else:
                label = token if len(token) <= 6 else token.split("(")[0] + "(..)"
                bw = max(24, 7 * len(label) + 6)
                svg.rect(cx - bw / 2, cy - 11, bw, 22, cls="gate-box")
                svg.text(cx, cy + 3, label, anchor="middle")
    svg.add("</g>")
    return y0 + (wires - 1) * CIRCUIT_ROW_H + 2 * MARGIN


def _cell_origin(x0: float, y0: float, index: int, k: int) -> tuple[float, float]:
    row, col = index >> k, index & ((1 << k) - 1)
    return x0 + col * CELL_W, y0 + row * CELL_H


def _draw_grid(svg: _Svg, layer: dict, n: int, k: int, x0: float, y0: float,
               bars: str, decades: int) -> None:
    size = 2 ** n
    annotation = layer["annotation"]
    fills: dict[int, str] = {}
    if annotation:
        if annotation["kind"] == "rotation":
            fills.update({i: "cell-odd" for i in annotation["subset"]})
        elif annotation["kind"] in ("dual_rotation", "butterfly"):
            fills.update({i: "cell-even" for i in annotation["even"]})
            fills.update({i: "cell-odd" for i in annotation["odd"]})
        elif annotation["kind"] == "swap_pairs":
            for a, b in annotation["pairs"]:
                fills[a] = "cell-even"
                fills[b] = "cell-odd"
    for index in range(size):
        x, y = _cell_origin(x0, y0, index, k)
        if index in fills:
            svg.rect(x, y, CELL_W, CELL_H, cls=f"cell {fills[index]}")
        else:
            svg.rect(x, y, CELL_W, CELL_H, cls="cell")
        bits = format(index, f"0{n}b")
        svg.text(x + 3, y + CELL_H - 8, bits)
        p = layer["probabilities"][index]
        re, im = layer["amplitudes"][index]
        svg.rect(x + 3, y + 4, bar_length(p, bars, decades) * (CELL_W - 30), 5, cls="prob-bar")
        svg.text(x + 3, y + CELL_H - 18, f"{p:.4f}")
        if p > 1e-18:
            cx, cy = x + CELL_W - 12, y + CELL_H / 2
            svg.circle(cx, cy, 7, cls="disc")
            phase = math.atan2(im, re)
            svg.line(cx, cy, cx + 7 * math.cos(phase), cy - 7 * math.sin(phase), cls="tick")
    if annotation:
        _draw_annotation_marks(svg, annotation, n, k, x0, y0)


def _draw_annotation_marks(svg: _Svg, annotation: dict, n: int, k: int,
                           x0: float, y0: float) -> None:
    kind = annotation["kind"]
    grid_right = x0 + (2 ** k) * CELL_W

    def arc(y_center: float, color: str, angle: float) -> None:
        r = 8.0
        sweep = 0 if angle >= 0 else 1
        svg.add(f'<path class="rotation-arc" stroke="{color}" '
                f'd="M {_f(grid_right + 6)} {_f(y_center + r)} '
                f'A {_f(r)} {_f(r)} 0 0 {sweep} {_f(grid_right + 6)} {_f(y_center - r)}" '
                f'data-angle="{_f(angle)}"/>')
        svg.text(grid_right + 18, y_center + 3, _angle_label(angle))

    def subset_mid_y(indices: list[int]) -> float:
        rows = [i >> k for i in indices]
        return y0 + (min(rows) + max(rows) + 1) / 2 * CELL_H

    if kind == "rotation":
        arc(subset_mid_y(annotation["subset"]), GREEN, annotation["angle"])
    elif kind == "dual_rotation":
        arc(subset_mid_y(annotation["even"]) - 6, PURPLE, annotation["angle_even"])
        arc(subset_mid_y(annotation["odd"]) + 6, GREEN, annotation["angle_odd"])
        if annotation["exchange"]:
            # one double-headed arrow per contiguous even/odd block pair
            ye = subset_mid_y(annotation["even"])
            yo = subset_mid_y(annotation["odd"])
            svg.line(grid_right + 34, ye, grid_right + 34, yo, cls="exchange-arrow",
                     stroke="#333", extra=' marker-start="url(#arrow)" marker-end="url(#arrow)"')
    elif kind == "butterfly":
        for i in annotation["even"]:
            x, y = _cell_origin(x0, y0, i, k)
            svg.text(x + CELL_W - 26, y + CELL_H - 8, "⊕", cls="badge")
        for i in annotation["odd"]:
            x, y = _cell_origin(x0, y0, i, k)
            svg.text(x + CELL_W - 26, y + CELL_H - 8, "⊖", cls="badge")
    elif kind == "swap_pairs":
        for a, b in annotation["pairs"]:
            xa, ya = _cell_origin(x0, y0, a, k)
            xb, yb = _cell_origin(x0, y0, b, k)
            svg.line(xa + CELL_W / 2, ya + CELL_H / 2, xb + CELL_W / 2, yb + CELL_H / 2,
                     cls=f"swap-arrow swap-{annotation['layout_class']}",
                     extra=' marker-start="url(#arrow)" marker-end="url(#arrow)"')


def _draw_qubit_stats(svg: _Svg, stats: list[dict], x0: float, y0: float) -> None:
    svg.add('<g class="qubit-stats">')
    svg.text(x0, y0 - 8, "reduced states (output)")
    for q, s in enumerate(stats):
        y = y0 + q * 30
        svg.text(x0, y + 10, f"q{q}")
        svg.rect(x0 + 24, y + 2, 60 * s["linear_entropy"], 4, cls="entropy-bar")
        svg.rect(x0 + 24, y + 8, 60 * s["von_neumann_entropy"] / 1.0, 4, cls="entropy-bar")
        svg.rect(x0 + 24, y + 14, 60 * s["prob_one"], 5, cls="prob-bar")
        cx, cy = x0 + 100, y + 10
        if s["phase"] is not None:
            svg.circle(cx, cy, 8, cls="disc")
            svg.line(cx, cy, cx + 8 * math.cos(s["phase"]), cy - 8 * math.sin(s["phase"]),
                     cls="tick")
    svg.add("</g>")


def _draw_half_matrix(svg: _Svg, hm: dict, x0: float, y0: float) -> None:
    svg.add('<g class="half-matrix">')
    svg.text(x0, y0 - 8, "qubit pairs")
    size = 54
    for cell in hm["cells"]:
        i, j = cell["wires"]
        x = x0 + i * size
        y = y0 + (j - 1) * size
        svg.rect(x, y, size - 4, size - 4, cls="cell", extra=f' data-pair="{i},{j}"')
        svg.text(x + 2, y + 10, f"{i},{j}")
        corr = cell["correlation"]
        svg.rect(x + 2, y + 14, abs(corr) * (size - 8), 4,
                 fill=BLUE if corr >= 0 else RED, extra=' data-metric="correlation"')
        svg.rect(x + 2, y + 21, cell["concurrence"] * (size - 8), 4,
                 fill=BLUE, extra=' data-metric="concurrence"')
        svg.rect(x + 2, y + 28, cell["linear_entropy"] * (size - 8), 4, cls="entropy-bar")
        svg.rect(x + 2, y + 35, cell["von_neumann_entropy"] / 2.0 * (size - 8), 4,
                 cls="entropy-bar")
    svg.add("</g>")


def render_report(report: dict) -> str:
    """Self-contained SVG for a SimulationReport; refuses more than 8 qubits."""
    n = report["num_qubits"]
    if n > MAX_RENDER_QUBITS:
        raise ValueError(
            f"rendering is limited to {MAX_RENDER_QUBITS} qubits; a {n}-qubit "
            f"state has {2 ** n} amplitudes, too many for a readable page")
    k = report["layout_k"]
    bars = report["options"]["bars"]
    decades = report["options"]["decades"]
    circuit_doc = json.loads(report["circuit"])
    rows, cols = 2 ** (n - k), 2 ** k
    grid_w = cols * CELL_W + 110
    grid_h = rows * CELL_H
    layers = report["layers"]
    total_w = MARGIN * 2 + max(len(layers) * (grid_w + GRID_GAP),
                               len(circuit_doc["cols"]) * CIRCUIT_COL_W + 40) + 260
    svg = _Svg()
    y_after_circuit = MARGIN + 10
    body = _Svg()
    y_grids = _draw_circuit(body, circuit_doc, MARGIN + 30, y_after_circuit)
    for li, layer in enumerate(layers):
        x0 = MARGIN + 30 + li * (grid_w + GRID_GAP)
        body.add(f'<g class="layer" id="layer-{li}">')
        body.text(x0, y_grids - 6, f"after layer {li}" if li else "initial state")
        _draw_grid(body, layer, n, k, x0, y_grids, bars, decades)
        body.add("</g>")
    side_x = MARGIN + 30 + len(layers) * (grid_w + GRID_GAP) + 40
    _draw_qubit_stats(body, layers[-1]["qubit_stats"], side_x, y_grids + 14)
    if report["half_matrix"] is not None:
        _draw_half_matrix(body, report["half_matrix"], side_x,
                          y_grids + 14 + n * 30 + 40)
    total_h = y_grids + grid_h + max(n * 30, (n - 1) * 54) + 140
    svg.add(f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(total_w)}" '
            f'height="{_f(total_h)}" viewBox="0 0 {_f(total_w)} {_f(total_h)}">')
    svg.add(f"<style>{_STYLE}</style>")
    svg.add('<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="4" refY="4" '
            'orient="auto-start-reverse"><path d="M 0 0 L 8 4 L 0 8 z" fill="#333"/>'
            "</marker></defs>")
    svg.parts.extend(body.parts)
    svg.add("</svg>")
    return "".join(svg.parts) + "\n"
