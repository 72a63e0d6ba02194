#!/usr/bin/env python3
"""Builds the ko chart fixtures.

figure1.json  the Adams-Novikov chart of ko: E2 = Z[eta, v1^2]/(2 eta) with
              eta in (1,1) and v1^2 in (4,0), d3(eta^k v1^2j) = eta^(k+3) v1^(2j-2)
              for j odd, and the homotopy as tau-towers read off from E_infinity.
figure2.json  the tau-Bockstein chart of the connective cover for y = x/2,
              computed here directly from the towers: the cover keeps the part
              of every tower on or below the line, and its E2 is read off the
              long exact sequence of the truncated towers.
TRANSCRIPTION.json  inventory of every square, dot and arrow with provenance.

Only the standard library is used, so the fixtures do not depend on the C++
engine they are used to test.
"""

import argparse
import json
from fractions import Fraction
from math import floor
from pathlib import Path

X0, X1, Y0, Y1 = 0, 24, -1, 26
WINDOW = {"x": [X0, X1], "y": [Y0, Y1], "left": "zero", "right": "unknown", "top": "zero", "bottom": "stable"}
ALPHA = Fraction(1, 2)

# Positions the prose fixes; everything else follows from the standard ko computation.
TEXT = {
    ("square", (0, 0)): "unit class",
    ("dot", (1, 1)): "eta",
    ("square", (4, 0)): "blue square mapping by 2",
    ("arrow", 3, (4, 0)): "line-crossing d3",
    ("dot2", (1, 0)): "orange dropped lift",
    ("dot2", (2, 1)): "orange dropped lift",
    ("dot2", (17, 8)): "orange dropped lift",
    ("dot2", (18, 9)): "orange dropped lift",
    ("arrow2", 2, (18, 6)): "orange d2",
    ("arrow2", 2, (19, 7)): "orange d2",
}


def mono(k, j):
    parts = []
    if k == 1:
        parts.append("eta")
    elif k > 1:
        parts.append(f"eta^{k}")
    if j > 0:
        parts.append(f"v1^{2 * j}")
    return "*".join(parts) if parts else "1"


def in_window(x, y):
    return X0 <= x <= X1 and Y0 <= y <= Y1


# ---------------------------------------------------------------- E2 and d3 of ko

def e2_generators():
    """(x, y) -> (name, order, k, j)."""
    out = {}
    for k in range(0, X1 + 1):
        for j in range(0, X1 // 4 + 1):
            x, y = k + 4 * j, k
            if in_window(x, y):
                out[(x, y)] = (mono(k, j), 0 if k == 0 else 2, k, j)
    return out


def d3_table(e2):
    out = {}
    for (x, y), (_, _, k, j) in e2.items():
        if j % 2 == 1:
            t = (x - 1, y + 3)
            if t in e2:
                out[(x, y)] = t
    return out


class Tower:
    """A tau-tower in one stem: elements at y = top, top - 1, ..., top - length + 1."""

    def __init__(self, stem, top, length, order, name, coeff):
        self.stem, self.top, self.length, self.order, self.name, self.coeff = stem, top, length, order, name, coeff

    def ys(self):
        bottom = Y0 if self.length is None else self.top - self.length + 1
        return range(self.top, max(bottom, Y0) - 1, -1)

    def bottom(self):
        return None if self.length is None else self.top - self.length + 1

    def element(self, y):
        i = self.top - y
        return self.name if i == 0 else (f"tau.{self.name}" if i == 1 else f"tau^{i}.{self.name}")


def ko_towers(e2, d3):
    hit = set(d3.values())
    towers = []
    for (x, y), (name, order, k, j) in sorted(e2.items()):
        supports = (x, y) in d3
        if supports and order == 2:
            continue  # eta^k v1^2j with j odd dies
        if (x, y) in hit:
            towers.append(Tower(x, y, 2, 2, name, 1))
        elif supports:
            towers.append(Tower(x, y, None, 0, "2*" + name, 2))  # 2 v1^(4m+2) survives
        else:
            # permanent and not hit; a hit target whose source lies past the right edge is still torsion
            src = (x + 1, y - 3)
            torsion = k >= 3 and j % 2 == 0
            if torsion and not in_window(*src):
                towers.append(Tower(x, y, 2, 2, name, 1))
            elif torsion:
                raise AssertionError(f"unexpected surviving class {name}")
            else:
                towers.append(Tower(x, y, None, order, name, 1))
    return towers


# ---------------------------------------------------------------- chart from towers

def cells_of(towers):
    """(x, y) -> list of (tower, element name); at most one tower per degree for ko."""
    cells = {}
    for t in towers:
        for y in t.ys():
            if in_window(t.stem, y):
                cells.setdefault((t.stem, y), []).append(t)
    for d, ts in cells.items():
        assert len(ts) == 1, f"two towers meet at {d}"
    return {d: ts[0] for d, ts in cells.items()}


def pi_payload(towers):
    cells = cells_of(towers)
    out_cells, tau = [], []
    for (x, y), t in sorted(cells.items()):
        out_cells.append({"at": [x, y], "gens": [{"name": t.element(y), "order": t.order}]})
        below = cells.get((x, y - 1))
        if below is t:
            tau.append({"from": [x, y], "images": {t.element(y): {t.element(y - 1): 1}}})
    return {"cells": out_cells, "tau": tau}, cells


def group(gens):
    return [{"name": n, "order": o} for n, o in gens]


def bss_document(e2_cells, pi, proj, delta, diffs, colors, tags, lines):
    payload = {
        "window": WINDOW,
        "pi": pi,
        "e2": [{"at": list(d), "gens": group(g)} for d, g in sorted(e2_cells.items())],
        "les": {
            "proj": [{"at": list(d), "images": m} for d, m in sorted(proj.items())],
            "delta": [{"at": list(d), "images": m} for d, m in sorted(delta.items())],
        },
        "differentials": [{"r": r, "from": list(d), "matrix": [[1]]} for (r, d) in sorted(diffs)],
        "max_page": 3,
        "complete": True,
        "display": {
            "colors": [{"at": list(d), "colors": c} for d, c in sorted(colors.items())],
            "tags": [{"r": r, "from": list(d), "tag": t} for (r, d), t in sorted(tags.items())],
            "lines": lines,
        },
    }
    return {"schema": 1, "kind": "bss-pages", "payload": payload}


def eta_lines(e2, keep=lambda d: True):
    lines = []
    for (x, y), (_, _, k, j) in sorted(e2.items()):
        t = (x + 1, y + 1)
        if t in e2 and keep((x, y)) and keep(t):
            lines.append({"from": [x, y], "to": list(t), "kind": "eta", "hidden": False, "jump": 0, "note": ""})
    return lines


def figure1(e2, d3, towers):
    pi, cells = pi_payload(towers)
    e2_cells = {d: [(g[0], g[1])] for d, g in e2.items()}
    proj, delta = {}, {}
    for t in towers:
        if in_window(t.stem, t.top):
            name = e2[(t.stem, t.top)][0]
            proj[(t.stem, t.top)] = {t.element(t.top): {name: t.coeff}}
    for s, tgt in d3.items():
        t = cells.get(tgt)
        b = (tgt[0], tgt[1] - 1)
        assert t is not None and t.bottom() == b[1], f"d3 target {tgt} is not the top of a length-2 tower"
        delta[s] = {e2[s][0]: {t.element(b[1]): 1}}
    colors = {d: ["black"] for d in e2}
    return bss_document(e2_cells, pi, proj, delta, {(3, s) for s in d3}, colors, {}, eta_lines(e2)), e2_cells


def floor_line(x):
    return floor(ALPHA * x)


def figure2(e2, d3, towers):
    """The cover: every tower cut at the line; E2 from the long exact sequence."""
    cut = []
    dropped = {}
    for t in towers:
        c = floor_line(t.stem)
        if t.top <= c:
            cut.append(t)
            continue
        l = t.top - c
        if t.length is not None and t.length - l <= 0:
            continue
        nt = Tower(t.stem, c, None if t.length is None else t.length - l, t.order, t.element(c), 0)
        nt.source = t
        dropped[(t.stem, c)] = (t, l)
        cut.append(nt)
    for t in cut:
        if not hasattr(t, "source"):
            t.source = t
    pi, cells = pi_payload(cut)
    y_cells = cells_of(towers)
    tops = {(t.stem, t.top): t for t in cut if in_window(t.stem, t.top)}
    bottoms = {(t.stem, t.bottom()): t for t in cut if t.length is not None}

    e2_cells, proj, delta, colors = {}, {}, {}, {}
    for x in range(X0, X1 + 1):
        for y in range(Y0, Y1 + 1):
            top = tops.get((x, y))
            ker = bottoms.get((x - 1, y + 2))
            if top is None and ker is None:
                continue
            if top is not None and ker is not None:
                # Both pieces: the towers through (x, y) and (x - 1, y + 1), (x - 1, y + 2) are those of ko,
                # so by the five lemma E2 agrees with that of ko.
                for d in [(x, y), (x, y + 1), (x - 1, y + 1), (x - 1, y + 2)]:
                    a, b = cells.get(d), y_cells.get(d)
                    assert (a is None) == (b is None), d
                    assert a is None or (a.source is b and a.top == b.top), d
                name = e2[(x, y)][0]
                e2_cells[(x, y)] = [(name, e2[(x, y)][1])]
                proj[(x, y)] = {top.element(y): {name: top.source.coeff}}
                delta[(x, y)] = {name: {ker.element(y + 2): 1}}
                colors[(x, y)] = ["black"]
                continue
            if top is not None:
                t0, l = dropped.get((x, y), (None, 0))
                name = f"drop({t0.name},{l})" if t0 else top.name
                e2_cells[(x, y)] = [(name, top.order)]
                proj[(x, y)] = {top.element(y): {name: 1}}
                # f on E2 is proj of the same element in ko.
                if t0:
                    colors[(x, y)] = ["orange"]
                else:
                    colors[(x, y)] = ["black" if top.coeff == 1 else "blue"]
            else:
                src = (x, y)
                name = e2[src][0]
                assert d3.get(src) == (x - 1, y + 3), src
                e2_cells[src] = [(name, 2)]
                delta[src] = {name: {ker.element(y + 2): 1}}
                colors[src] = ["black"]

    diffs, tags = set(), {}
    for t in cut:
        if t.length is None:
            continue
        src = (t.stem + 1, t.bottom() - 2)
        if not in_window(*src):
            continue
        r = t.length + 1
        diffs.add((r, src))
        tgt_color = colors[(t.stem, t.top)][0]
        tags[(r, src)] = "drop" if tgt_color == "orange" else "lifted"
    lines = eta_lines(e2, keep=lambda d: d[1] <= floor_line(d[0]) and d in e2_cells)
    return bss_document(e2_cells, pi, proj, delta, diffs, colors, tags, lines), e2_cells, diffs, colors, tags


def inventory(e2_cells, diffs, colors, figure):
    squares, dots, arrows = [], [], []
    for d, gens in sorted(e2_cells.items()):
        for i, (name, order) in enumerate(gens):
            entry = {"at": list(d), "name": name}
            if colors is not None:
                entry["color"] = colors[d][i]
            kind = "square" if order == 0 else "dot"
            key = (kind if figure == 1 else ("dot2" if kind == "dot" else kind), d)
            entry["provenance"] = "text: " + TEXT[key] if key in TEXT else "standard ko computation"
            (squares if order == 0 else dots).append(entry)
    for r, d in sorted(diffs):
        key = ("arrow" if figure == 1 else "arrow2", r, d)
        arrows.append({"r": r, "from": list(d), "provenance": "text: " + TEXT[key] if key in TEXT
                       else "standard ko computation"})
    return {"squares": squares, "dots": dots, "arrows": arrows}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures" / "ko"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    e2 = e2_generators()
    d3 = d3_table(e2)
    towers = ko_towers(e2, d3)
    fig1, e2_1 = figure1(e2, d3, towers)
    fig2, e2_2, diffs2, colors2, tags2 = figure2(e2, d3, towers)
    manifest = {
        "window": WINDOW,
        "line": "1/2",
        "figure1": inventory(e2_1, {(3, s) for s in d3}, None, 1),
        "figure2": inventory(e2_2, diffs2, colors2, 2),
        "figure2_tags": [{"r": r, "from": list(d), "tag": t} for (r, d), t in sorted(tags2.items())],
        "lifts": {"unit": {"at": [0, 0], "lifts": True}, "eta": {"at": [1, 1], "lifts": False}},
        "notes": [
            "Structure lines are eta-multiplications visible on E2; hidden extensions are not transcribed.",
            "Stems 21-24 are included for context; the right edge is unknown.",
        ],
    }
    for name, doc in [("figure1.json", fig1), ("figure2.json", fig2), ("TRANSCRIPTION.json", manifest)]:
        (out / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
