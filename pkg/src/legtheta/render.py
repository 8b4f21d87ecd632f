"""Deterministic SVG and ASCII pictures of front and link diagrams.

Both diagram kinds are sweeps, so one column layout serves both.  An event
that adds strands gets a preceding column in which the strands above it
move up to make room; an event that removes strands gets a following
column in which they move back down.  Event glyphs therefore never share
space with passing strands.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, FrontDiagram, LeftCusp, RightCusp, Vertex
from .ribbon import Cap, Cross, Cup, LinkDiagram

__all__ = ["render", "RenderLayout", "layout", "ascii_crossings"]

PALETTE = ("#1f4e9c", "#b8322a", "#2a8a3e", "#8a5a1f", "#6a2a8a", "#1f8a8a")


@dataclass(frozen=True)
class Column:
    kind: str               # 'event' or 'shift'
    event: int
    passing: tuple          # (segment, level on the left, level on the right)


@dataclass(frozen=True)
class RenderLayout:
    columns: tuple
    height: int             # number of strand levels
    key: dict               # segment -> path key (edge label or component index)
    dx: float = 60.0
    dy: float = 40.0
    margin: float = 30.0
    stroke: float = 2.0
    gap: float = 8.0        # halo width around over strands


def layout(d) -> RenderLayout:
    sw = d.sweep
    if isinstance(d, FrontDiagram):
        key = {s: sw.label[s] for s in range(len(sw.label))}
    else:
        key = dict(d.component_of)
    cols = []
    strands: list[int] = []
    height = 1
    for j, ev in enumerate(d.events):
        p, q = ev.arity
        k = ev.level
        below, above = strands[:k], strands[k + p:]
        top = k + max(p, q)
        still = tuple((s, i, i) for i, s in enumerate(below))
        if q > p:
            cols.append(Column("shift", j, still + tuple((s, k + i, k + i) for i, s in enumerate(strands[k:k + p]))
                               + tuple((s, k + p + i, top + i) for i, s in enumerate(above))))
        cols.append(Column("event", j, still + tuple((s, top + i, top + i) for i, s in enumerate(above))))
        if q < p:
            cols.append(Column("shift", j, still + tuple((s, k + i, k + i) for i, s in enumerate(sw.outs[j]))
                               + tuple((s, top + i, k + q + i) for i, s in enumerate(above))))
        height = max(height, top + len(above))
        strands = below + list(sw.outs[j]) + above
    return RenderLayout(tuple(cols), height, key)


def _f(v: float) -> str:
    return f"{v:.1f}"


def _over_is_falling(ev) -> bool:
    return ev.over == "falling" if isinstance(ev, Cross) else True


# ----------------------------------------------------------- SVG

def _svg(d, lay: RenderLayout) -> str:
    sw = d.sweep
    dx, dy, m = lay.dx, lay.dy, lay.margin

    def y(level):
        return m + (lay.height - 1 - level) * dy

    def smooth(x0, y0, x1, y1):
        xm = (x0 + x1) / 2
        return f"M {_f(x0)} {_f(y0)} C {_f(xm)} {_f(y0)} {_f(xm)} {_f(y1)} {_f(x1)} {_f(y1)}"

    pieces: dict = {}
    overs = []
    vertices = []

    def put(seg, path):
        pieces.setdefault(lay.key[seg], []).append(path)

    for c, col in enumerate(lay.columns):
        x0 = m + c * dx
        x1 = x0 + dx
        for s, l0, l1 in col.passing:
            put(s, smooth(x0, y(l0), x1, y(l1)) if l0 != l1 else
                f"M {_f(x0)} {_f(y(l0))} L {_f(x1)} {_f(y(l1))}")
        if col.kind != "event":
            continue
        j = col.event
        ev = d.events[j]
        k = ev.level
        ins, outs = sw.ins[j], sw.outs[j]
        if isinstance(ev, (Crossing, Cross)):
            rise = smooth(x0, y(k), x1, y(k + 1))
            fall = smooth(x0, y(k + 1), x1, y(k))
            put(ins[0], rise)
            put(ins[1], fall)
            overs.append((lay.key[ins[1]], fall) if _over_is_falling(ev) else (lay.key[ins[0]], rise))
        elif isinstance(ev, LeftCusp):
            tip_x, tip_y = x0 + dx * 0.2, (y(k) + y(k + 1)) / 2
            cx = x0 + dx * 0.6
            for lv, s in ((k, outs[0]), (k + 1, outs[1])):
                put(s, f"M {_f(tip_x)} {_f(tip_y)} C {_f(cx)} {_f(tip_y)} {_f(cx)} {_f(y(lv))} {_f(x1)} {_f(y(lv))}")
        elif isinstance(ev, RightCusp):
            tip_x, tip_y = x1 - dx * 0.2, (y(k) + y(k + 1)) / 2
            cx = x1 - dx * 0.6
            for lv, s in ((k, ins[0]), (k + 1, ins[1])):
                put(s, f"M {_f(x0)} {_f(y(lv))} C {_f(cx)} {_f(y(lv))} {_f(cx)} {_f(tip_y)} {_f(tip_x)} {_f(tip_y)}")
        elif isinstance(ev, Cap):
            bx = x0 + dx * 0.2
            put(outs[0], f"M {_f(x1)} {_f(y(k))} C {_f(bx)} {_f(y(k))} {_f(bx)} {_f(y(k + 1))} {_f(x1)} {_f(y(k + 1))}")
        elif isinstance(ev, Cup):
            bx = x1 - dx * 0.2
            put(ins[0], f"M {_f(x0)} {_f(y(k))} C {_f(bx)} {_f(y(k))} {_f(bx)} {_f(y(k + 1))} {_f(x0)} {_f(y(k + 1))}")
        elif isinstance(ev, Vertex):
            span = max(ev.left, ev.right)
            cx, cy = (x0 + x1) / 2, y(k + (span - 1) / 2)
            for i, s in enumerate(ins):
                put(s, f"M {_f(x0)} {_f(y(k + i))} L {_f(cx)} {_f(cy)}")
            for i, s in enumerate(outs):
                put(s, f"M {_f(cx)} {_f(cy)} L {_f(x1)} {_f(y(k + i))}")
            vertices.append((ev.name, cx, cy))

    width = 2 * m + len(lay.columns) * dx
    height = 2 * m + (lay.height - 1) * dy
    kind = "front" if isinstance(d, FrontDiagram) else "link"
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
           f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}" class="{kind}">',
           f'<rect width="{_f(width)}" height="{_f(height)}" fill="white"/>']
    if isinstance(d, FrontDiagram):
        order = [e.name for e in d.edges]
        cls, attr = "edge", "data-edge"
    else:
        order = sorted(pieces)
        cls, attr = "component", "data-component"
    color = {key: PALETTE[i % len(PALETTE)] for i, key in enumerate(order)}
    for key in order:
        if key in pieces:
            out.append(f'<path class="{cls}" {attr}="{key}" fill="none" stroke="{color[key]}" '
                       f'stroke-width="{_f(lay.stroke)}" d="{" ".join(pieces[key])}"/>')
    for key, path in overs:
        out.append(f'<path class="crossing" fill="none" stroke="white" '
                   f'stroke-width="{_f(lay.gap)}" d="{path}"/>')
        out.append(f'<path class="over" fill="none" stroke="{color[key]}" '
                   f'stroke-width="{_f(lay.stroke)}" d="{path}"/>')
    for name, cx, cy in vertices:
        out.append(f'<circle class="vertex" data-vertex="{name}" cx="{_f(cx)}" cy="{_f(cy)}" '
                   f'r="5.0" fill="black"/>')
        out.append(f'<text x="{_f(cx)}" y="{_f(cy - 10)}" font-size="12" '
                   f'text-anchor="middle">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------- ASCII

def _ascii(d, lay: RenderLayout) -> str:
    sw = d.sweep
    rows = 2 * lay.height - 1
    widths = []
    for col in lay.columns:
        moving = sum(1 for _, a, b in col.passing if a != b)
        widths.append(5 if col.kind == "event" else moving + 2)
    grid = [[" "] * sum(widths) for _ in range(rows)]

    def r(level):
        return 2 * (lay.height - 1 - level)

    def put(row, c, ch):
        grid[int(row)][c] = ch

    c0 = 0
    for col, w in zip(lay.columns, widths):
        moving = [(s, a, b) for s, a, b in col.passing if a != b]
        moving.sort(key=lambda t: -t[1] if t[2] > t[1] else t[1])
        for s, a, b in col.passing:
            if a == b:
                for c in range(c0, c0 + w):
                    put(r(a), c, "-")
        for i, (s, a, b) in enumerate(moving):
            turn = c0 + 1 + i
            for c in range(c0, turn):
                put(r(a), c, "-")
            for row in range(min(r(a), r(b)) + 1, max(r(a), r(b))):
                put(row, turn, "|")
            put(r(a), turn, "+")
            put(r(b), turn, "+")
            for c in range(turn + 1, c0 + w):
                put(r(b), c, "-")
        if col.kind == "event":
            ev = d.events[col.event]
            k = ev.level
            p, q = ev.arity
            for i in range(p):
                put(r(k + i), c0, "-")
            for i in range(q):
                put(r(k + i), c0 + 4, "-")
            mid = r(k) - 1
            if isinstance(ev, (Crossing, Cross)):
                put(r(k + 1), c0 + 1, "\\")
                put(r(k), c0 + 1, "/")
                put(mid, c0 + 2, "\\" if _over_is_falling(ev) else "/")
                put(r(k + 1), c0 + 3, "/")
                put(r(k), c0 + 3, "\\")
            elif isinstance(ev, (LeftCusp, Cap)):
                put(mid, c0 + 2, "<" if isinstance(ev, LeftCusp) else "(")
                put(r(k + 1), c0 + 3, "/")
                put(r(k), c0 + 3, "\\")
            elif isinstance(ev, (RightCusp, Cup)):
                put(r(k + 1), c0 + 1, "\\")
                put(r(k), c0 + 1, "/")
                put(mid, c0 + 2, ">" if isinstance(ev, RightCusp) else ")")
            elif isinstance(ev, Vertex):
                span = max(p, q)
                for i in range(p):
                    put(r(k + i), c0 + 1, "-")
                for i in range(q):
                    put(r(k + i), c0 + 3, "-")
                lo, hi = r(k + span - 1), r(k)
                for row in range(lo, hi + 1):
                    put(row, c0 + 2, "|")
                put((lo + hi) // 2, c0 + 2, "*")
        c0 += w
    return "\n".join("".join(line).rstrip() for line in grid) + "\n"


def ascii_crossings(text: str) -> int:
    """Crossing glyphs sit alone on the odd rows of an ASCII picture."""
    lines = text.splitlines()
    return sum(line.count("\\") + line.count("/") for line in lines[1::2])


def render(d, format: str = "svg") -> str:
    """Picture of a FrontDiagram or LinkDiagram as SVG 1.1 or ASCII text."""
    if not isinstance(d, (FrontDiagram, LinkDiagram)):
        raise TypeError(f"cannot render {type(d).__name__}")
    lay = layout(d)
    if format == "svg":
        return _svg(d, lay)
    if format == "ascii":
        return _ascii(d, lay)
    raise ValueError(f"unknown format {format!r}")
