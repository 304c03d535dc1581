"""Text, JSON, TikZ and DOT renderings of a frieze on the AR quiver.

Grid layout: row k holds the diagonals {i, i+k} (vertices mod m) of length k,
k = 2 .. m//2, at column 2(i-1) + (k-2), so every mesh is a diamond.  Column
positions repeat with period 2m; the repeated first column is emitted with
``seam: true``, as are the second copies of the diameters when m is even.
"""

from __future__ import annotations

import json
from typing import Mapping

from .ccmap import FriezeReport
from .laurent import LaurentPoly, LaurentRing
from .polygon import Diagonal, PolygonCategory


def grid_layout(model: PolygonCategory) -> list[dict]:
    m = model.m
    cells = []
    for k in range(2, m // 2 + 1):
        for i in range(1, m + 2):
            v = (i - 1) % m + 1
            w = (i + k - 1) % m + 1
            seam = i == m + 1 or (2 * k == m and i > m // 2)
            cells.append({
                "object": str(Diagonal(v, w)),
                "row": k,
                "col": 2 * (i - 1) + (k - 2),
                "seam": seam,
            })
    return cells


def emit_text_grid(values: Mapping[Diagonal, LaurentPoly], model: PolygonCategory) -> str:
    cells = grid_layout(model)
    text = {c["object"]: str(values[Diagonal.parse(c["object"])]) for c in cells}
    width = max(len(t) for t in text.values()) + 2
    ncols = max(c["col"] for c in cells) + 1
    lines = []
    for k in range(model.m // 2, 1, -1):
        row = [""] * ncols
        for c in cells:
            if c["row"] == k:
                row[c["col"]] = text[c["object"]] + ("*" if c["seam"] else "")
        lines.append("".join(s.center(width) for s in row).rstrip())
    lines.append("(* = repeated across the seam)")
    return "\n".join(lines) + "\n"


def emit_json(values: Mapping[Diagonal, LaurentPoly], model: PolygonCategory,
              report: FriezeReport | None = None, mode: str = "modified") -> str:
    ring = next(iter(values.values())).ring
    compact = dict(separators=(",", ":"))
    entries = [
        json.dumps({"object": str(d), "value": str(values[d])}, **compact)
        for d in sorted(values)
    ]
    head = {
        "polygon_size": model.m,
        "mode": mode,
        "variables": list(ring.names),
    }
    defects = [str(d) for d in report.defect_meshes()] if report is not None else []
    lines = ["{"]
    for key, val in head.items():
        lines.append(f' {json.dumps(key)}:{json.dumps(val, **compact)},')
    lines.append(' "values":[')
    lines.append(",\n".join("  " + e for e in entries))
    lines.append(" ],")
    lines.append(f' "defect_meshes":{json.dumps(defects, **compact)},')
    if report is not None:
        lines.append(f' "verified":{json.dumps(report.passed)},')
    grid = [json.dumps(c, **compact) for c in grid_layout(model)]
    lines.append(' "grid":[')
    lines.append(",\n".join("  " + g for g in grid))
    lines.append(" ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_json_values(text: str) -> dict[Diagonal, LaurentPoly]:
    doc = json.loads(text)
    ring = LaurentRing(doc["variables"])
    return {Diagonal.parse(e["object"]): ring.parse(e["value"]) for e in doc["values"]}


def latex(p: LaurentPoly) -> str:
    def mono(e):
        parts = []
        for name, k in zip(p.ring.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{{{k}}}")
        return " ".join(parts)

    def poly(q):
        out = []
        for idx, (e, c) in enumerate(q.sorted_terms()):
            body = mono(e)
            a = abs(c)
            body = str(a) if not body else (body if a == 1 else f"{a}{body}")
            sign = "-" if c < 0 else ("+" if idx else "")
            out.append(f"{sign}{body}")
        return "".join(out) or "0"

    den = p.denominator()
    if any(den):
        num = p * p.ring.monomial(den)
        return f"\\frac{{{poly(num)}}}{{{mono(den)}}}"
    return poly(p)


def emit_tikz(values: Mapping[Diagonal, LaurentPoly], model: PolygonCategory) -> str:
    cells = grid_layout(model)
    names = {}
    lines = [
        "\\begin{tikzpicture}[x=1.1cm, y=1.4cm, every node/.style={font=\\small}]",
    ]
    for n, c in enumerate(cells):
        d = Diagonal.parse(c["object"])
        node = f"n{n}"
        names[(c["row"], c["col"])] = node
        style = "[gray]" if c["seam"] else ""
        lines.append(
            f"  \\node{style} ({node}) at ({c['col']},{c['row']}) {{${latex(values[d])}$}};"
        )
    for (row, col), node in sorted(names.items()):
        for dc in (-1, 1):
            up = names.get((row + 1, col + dc))
            if up:
                lines.append(f"  \\draw[->] ({node}) -- ({up});" if dc > 0
                             else f"  \\draw[<-] ({node}) -- ({up});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def emit_dot(values: Mapping[Diagonal, LaurentPoly], model: PolygonCategory) -> str:
    lines = ["digraph ARQuiver {", "  node [shape=box];"]
    for d in sorted(model.objects):
        label = f"{d}\\n{values[d]}" if d in values else str(d)
        lines.append(f'  "{d}" [label="{label}"];')
    for b, c in sorted(model.arrows()):
        lines.append(f'  "{b}" -> "{c}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
