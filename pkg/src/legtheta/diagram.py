"""Front diagrams of Legendrian graphs as left-to-right event words.

A front is read by a vertical line sweeping from left to right.  The
strands met by the line are numbered bottom to top from 0, and the word
records what happens between consecutive generic slices:

``L l e``
    left cusp; two new strands of edge ``e`` appear at levels l, l+1
``R l``
    right cusp; strands l and l+1 (same edge) merge and disappear
``X l``
    crossing of strands l and l+1; the strand falling from l+1 is over
``V name l in=p out=q labels=...``
    vertex absorbing p strands from the left at levels l..l+p-1 and
    emitting q strands to the right, labelled bottom to top
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Union

__all__ = [
    "LeftCusp", "RightCusp", "Crossing", "Vertex", "Event", "Edge",
    "FrontDiagram", "DiagramError", "ParseError", "GraphStructure",
    "CuspPass", "CrossingPass", "Corner", "CycleTraversal",
    "parse", "serialize", "validate", "trace_cycle", "trace_knot",
    "vertex_cyclic_order", "same_cyclic_order", "CYCLES",
]


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams."""


class ParseError(DiagramError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class LeftCusp:
    level: int
    edge: str
    arity = (0, 2)

    def text(self) -> str:
        return f"L {self.level} {self.edge}"


@dataclass(frozen=True)
class RightCusp:
    level: int
    arity = (2, 0)

    def text(self) -> str:
        return f"R {self.level}"


@dataclass(frozen=True)
class Crossing:
    level: int
    arity = (2, 2)

    def text(self) -> str:
        return f"X {self.level}"


@dataclass(frozen=True)
class Vertex:
    name: str
    level: int
    left: int
    right: int
    labels: tuple[str, ...] = ()

    @property
    def arity(self) -> tuple[int, int]:
        return (self.left, self.right)

    def text(self) -> str:
        s = f"V {self.name} {self.level} in={self.left} out={self.right}"
        if self.labels:
            s += " labels=" + ",".join(self.labels)
        return s


Event = Union[LeftCusp, RightCusp, Crossing, Vertex]


@dataclass(frozen=True)
class Edge:
    """An edge between two vertices, or a closed loop (``v1 is None``).

    A loop is oriented so that it leaves its first left cusp along the
    lower branch; ``reversed`` flips this.
    """
    name: str
    v1: str | None
    v2: str | None
    reversed: bool = False

    @property
    def is_loop(self) -> bool:
        return self.v1 is None


# Sweep bookkeeping.  Each strand segment between two events gets an id;
# ``left``/``right`` record the event index and slot at each end.
class _Sweep(NamedTuple):
    label: list
    left: list
    right: list
    ins: list
    outs: list
    widths: list   # strand count before each event, plus the final count


def _run_sweep(events: tuple) -> _Sweep:
    label, left, right, ins, outs, widths = [], [], [], [], [], []
    strands: list[int] = []

    def new(lab, j, slot):
        label.append(lab)
        left.append((j, slot))
        right.append(None)
        return len(label) - 1

    for j, ev in enumerate(events):
        n = len(strands)
        widths.append(n)
        p, q = ev.arity
        lvl = ev.level
        hi = n - p if p else n
        if not 0 <= lvl <= hi:
            raise DiagramError(
                f"event {j} ({ev.text()}): level {lvl} out of range "
                f"for {n} strands")
        took = strands[lvl:lvl + p]
        for slot, s in enumerate(took):
            right[s] = (j, slot)
        if isinstance(ev, LeftCusp):
            made = [new(ev.edge, j, 0), new(ev.edge, j, 1)]
        elif isinstance(ev, RightCusp):
            if label[took[0]] != label[took[1]]:
                raise DiagramError(
                    f"event {j} ({ev.text()}): right cusp joins edges "
                    f"{label[took[0]]} and {label[took[1]]}")
            made = []
        elif isinstance(ev, Crossing):
            made = [new(label[took[1]], j, 0), new(label[took[0]], j, 1)]
        else:
            if len(ev.labels) != ev.right:
                raise DiagramError(
                    f"event {j} ({ev.text()}): {ev.right} strands but "
                    f"{len(ev.labels)} labels")
            made = [new(e, j, k) for k, e in enumerate(ev.labels)]
        ins.append(tuple(took))
        outs.append(tuple(made))
        strands[lvl:lvl + p] = made
    widths.append(len(strands))
    return _Sweep(label, left, right, ins, outs, widths)


@dataclass(frozen=True)
class FrontDiagram:
    mode: str
    vertices: tuple[tuple[str, int], ...]
    edges: tuple[Edge, ...]
    events: tuple[Event, ...]

    @cached_property
    def sweep(self) -> _Sweep:
        return _run_sweep(self.events)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {ev.name: j for j, ev in enumerate(self.events)
                if isinstance(ev, Vertex)}

    def edge(self, name: str) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise DiagramError(f"unknown edge {name!r}")

    def replace_events(self, events: Iterable[Event]) -> "FrontDiagram":
        return FrontDiagram(self.mode, self.vertices, self.edges,
                            tuple(events))

    def flipped(self) -> "FrontDiagram":
        """Upside-down front, the image under (x, y, z) -> (x, -y, -z).

        This map preserves the contact structure: tb is unchanged, rot
        changes sign and the cyclic order at every vertex is reversed.
        """
        out = []
        for ev, n in zip(self.events, self.sweep.widths):
            k = n - ev.level - ev.arity[0]
            if isinstance(ev, LeftCusp):
                out.append(LeftCusp(k, ev.edge))
            elif isinstance(ev, RightCusp):
                out.append(RightCusp(k))
            elif isinstance(ev, Crossing):
                out.append(Crossing(k))
            else:
                out.append(Vertex(ev.name, k, ev.left, ev.right, ev.labels[::-1]))
        edges = tuple(Edge(e.name, e.v1, e.v2, not e.reversed) if e.is_loop else e
                      for e in self.edges)
        return FrontDiagram(self.mode, self.vertices, edges, tuple(out))

    def __str__(self) -> str:
        return serialize(self)


# ---------------------------------------------------------------- text format

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_V_RE = re.compile(
    rf"V\s+({_NAME})\s+(-?\d+)\s+in=(\d+)\s+out=(\d+)(?:\s+labels=(\S+))?$")


def serialize(d: FrontDiagram) -> str:
    lines = [f"mode {d.mode}"]
    lines += [f"vertex {n} degree {k}" for n, k in d.vertices]
    for e in d.edges:
        if e.is_loop:
            lines.append(f"edge {e.name} loop" + (" reversed" if e.reversed else ""))
        else:
            lines.append(f"edge {e.name} {e.v1} {e.v2}")
    lines.append("events:")
    lines += [ev.text() for ev in d.events]
    return "\n".join(lines) + "\n"


def _int(tok: str, ln: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", ln, col) from None


def parse(text: str) -> FrontDiagram:
    """Parse ``.lfd`` source.  Levels, arities and labels are checked;
    global structure is left to :func:`validate`."""
    mode = None
    vertices: list[tuple[str, int]] = []
    edges: list[Edge] = []
    events: list[Event] = []
    where: list[int] = []
    edge_lines: list[int] = []
    in_events = False
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        toks = line.split()
        if not in_events:
            key = toks[0]
            if key == "mode" and len(toks) == 2:
                if toks[1] not in ("theta", "trivalent", "knot"):
                    raise ParseError(f"unknown mode {toks[1]!r}", ln, col)
                mode = toks[1]
            elif key == "vertex" and len(toks) == 4 and toks[2] == "degree":
                vertices.append((toks[1], _int(toks[3], ln, col)))
            elif key == "edge" and len(toks) in (3, 4) and toks[2] == "loop":
                if len(toks) == 4 and toks[3] != "reversed":
                    raise ParseError(f"unexpected {toks[3]!r}", ln, col)
                edges.append(Edge(toks[1], None, None, len(toks) == 4))
                edge_lines.append(ln)
            elif key == "edge" and len(toks) == 4:
                edges.append(Edge(toks[1], toks[2], toks[3]))
                edge_lines.append(ln)
            elif line.strip() == "events:":
                in_events = True
            else:
                raise ParseError(f"cannot parse header line {line.strip()!r}", ln, col)
            continue
        key = toks[0]
        if key == "L" and len(toks) == 3:
            events.append(LeftCusp(_int(toks[1], ln, col), toks[2]))
        elif key == "R" and len(toks) == 2:
            events.append(RightCusp(_int(toks[1], ln, col)))
        elif key == "X" and len(toks) == 2:
            events.append(Crossing(_int(toks[1], ln, col)))
        elif key == "V":
            m = _V_RE.match(line.strip())
            if not m:
                raise ParseError(f"malformed vertex event {line.strip()!r}", ln, col)
            labs = tuple(m.group(5).split(",")) if m.group(5) else ()
            events.append(Vertex(m.group(1), int(m.group(2)), int(m.group(3)),
                                 int(m.group(4)), labs))
        else:
            raise ParseError(f"unknown event {line.strip()!r}", ln, col)
        where.append(ln)
    if mode is None:
        raise ParseError("missing 'mode' line", 1)
    if not in_events:
        raise ParseError("missing 'events:' line", len(text.splitlines()) or 1)

    vnames = {n for n, _ in vertices}
    enames = [e.name for e in edges]
    for i, (e, ln) in enumerate(zip(edges, edge_lines)):
        if e.name in enames[:i]:
            raise ParseError(f"duplicate edge name {e.name!r}", ln)
        for v in (e.v1, e.v2):
            if v is not None and v not in vnames:
                raise ParseError(f"edge {e.name} names unknown vertex {v!r}", ln)
    degree = dict(vertices)
    for ev, ln in zip(events, where):
        if isinstance(ev, LeftCusp) and ev.edge not in enames:
            raise ParseError(f"unknown edge label {ev.edge!r}", ln)
        if isinstance(ev, Vertex):
            if ev.name not in degree:
                raise ParseError(f"unknown vertex {ev.name!r}", ln)
            if ev.left + ev.right != degree[ev.name]:
                raise ParseError(
                    f"vertex {ev.name}: in+out = {ev.left + ev.right} but "
                    f"degree {degree[ev.name]}", ln)
            if len(ev.labels) != ev.right:
                raise ParseError(f"vertex {ev.name}: arity mismatch, out={ev.right} "
                                 f"but {len(ev.labels)} labels", ln)
            for lab in ev.labels:
                if lab not in enames:
                    raise ParseError(f"unknown edge label {lab!r}", ln)
    d = FrontDiagram(mode, tuple(vertices), tuple(edges), tuple(events))
    try:
        d.sweep
    except DiagramError as exc:
        j = int(re.match(r"event (\d+)", str(exc)).group(1))
        raise ParseError(str(exc), where[j]) from None
    return d


# ------------------------------------------------------------------ tracing

class _Visit(NamedTuple):
    kind: str          # 'cusp' | 'cross' | 'end'
    event: int
    info: object       # cusp: 'up'/'down'; cross: (slot, dir); end: (side, slot)
    seg: int
    dir: int


def _walk(d: FrontDiagram, seg: int, dir: int, stop_seg: int | None = None):
    """Follow a strand from ``seg`` moving in ``dir`` (+1 right, -1 left).

    Yields visits until a vertex end is reached or, for loops, until the
    walk returns to ``stop_seg`` moving in the starting direction.
    """
    sw = d.sweep
    start = (seg, dir)
    while True:
        j, slot = sw.right[seg] if dir > 0 else sw.left[seg]
        ev = d.events[j]
        if isinstance(ev, Vertex):
            yield _Visit("end", j, ("L" if dir > 0 else "R", slot), seg, dir)
            return
        if isinstance(ev, Crossing):
            # input slot 0 rises to output slot 1 and vice versa
            yield _Visit("cross", j, (slot if dir > 0 else 1 - slot, dir), seg, dir)
            seg = sw.outs[j][1 - slot] if dir > 0 else sw.ins[j][1 - slot]
        else:
            # entering a cusp on the lower branch and leaving on the upper is "up"
            yield _Visit("cusp", j, "up" if slot == 0 else "down", seg, dir)
            seg = sw.ins[j][1 - slot] if dir > 0 else sw.outs[j][1 - slot]
            dir = -dir
        if stop_seg is not None and (seg, dir) == start:
            return


def _ends(d: FrontDiagram, v: str) -> list[tuple[str, int, str]]:
    """(side, slot, edge) for every end of vertex ``v``."""
    j = d.vertex_index[v]
    ev = d.events[j]
    sw = d.sweep
    out = [("L", k, sw.label[s]) for k, s in enumerate(sw.ins[j])]
    out += [("R", k, e) for k, e in enumerate(ev.labels)]
    return out


def _end_of(d: FrontDiagram, v: str, edge: str) -> tuple[str, int]:
    hits = [(side, k) for side, k, e in _ends(d, v) if e == edge]
    if len(hits) != 1:
        raise DiagramError(f"edge {edge} has {len(hits)} ends at vertex {v}")
    return hits[0]


def _edge_walk(d: FrontDiagram, v: str, edge: str) -> list[_Visit]:
    side, k = _end_of(d, v, edge)
    j = d.vertex_index[v]
    sw = d.sweep
    if side == "R":
        return list(_walk(d, sw.outs[j][k], +1))
    return list(_walk(d, sw.ins[j][k], -1))


@dataclass(frozen=True)
class GraphStructure:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    cycles: tuple[tuple[str, str], ...]   # (out-edge at a, in-edge at a)


CYCLES = ("C1", "C2", "C3")


def theta_cycles(d: FrontDiagram) -> dict[str, tuple[str, str]]:
    e1, e2, e3 = (e.name for e in d.edges)
    return {"C1": (e1, e2), "C2": (e1, e3), "C3": (e2, e3)}


def validate(d: FrontDiagram) -> GraphStructure:
    sw = d.sweep
    if sw.widths[-1] != 0:
        raise DiagramError(f"dangling strands at sweep end ({sw.widths[-1]} left open)")
    names = [n for n, _ in d.vertices]
    if len(set(names)) != len(names):
        raise DiagramError("duplicate vertex name")
    seen = [ev.name for ev in d.events if isinstance(ev, Vertex)]
    for n in names:
        if seen.count(n) != 1:
            raise DiagramError(f"vertex {n} appears {seen.count(n)} times in the event word")
    if d.mode == "theta":
        if len(d.vertices) != 2 or len(d.edges) != 3:
            raise DiagramError("wrong vertex count/degree for mode theta: need 2 vertices, 3 edges")
        a, b = names
        for e in d.edges:
            if (e.v1, e.v2) != (a, b):
                raise DiagramError(f"edge {e.name} must run from {a} to {b}")
    if d.mode in ("theta", "trivalent"):
        for n, k in d.vertices:
            if k != 3:
                raise DiagramError(f"wrong vertex count/degree for mode {d.mode}: {n} has degree {k}")
        if any(e.is_loop for e in d.edges):
            raise DiagramError(f"closed loop edges are not allowed in mode {d.mode}")
    if d.mode == "knot":
        if d.vertices or not all(e.is_loop for e in d.edges):
            raise DiagramError("knot mode takes loop edges only")

    # every end of every vertex must belong to its declared edges
    for n in names:
        labs = sorted(e for _, _, e in _ends(d, n))
        want = sorted([e.name for e in d.edges if e.v1 == n]
                      + [e.name for e in d.edges if e.v2 == n])
        if labs != want:
            raise DiagramError(f"vertex {n} carries edges {labs}, expected {want}")

    for e in d.edges:
        segs = {s for s, lab in enumerate(sw.label) if lab == e.name}
        if e.is_loop:
            starts = [s for s in segs if isinstance(d.events[sw.left[s][0]], LeftCusp)]
            if not starts:
                raise DiagramError(f"edge {e.name} not a single arc")
            visits = list(_walk(d, min(starts), +1, stop_seg=min(starts)))
            if any(vi.kind == "end" for vi in visits):
                raise DiagramError(f"edge {e.name} not a single arc")
        else:
            visits = _edge_walk(d, e.v1, e.name)
            last = visits[-1]
            tj = d.vertex_index[e.v2]
            if last.event != tj or d.sweep.label[last.seg] != e.name:
                raise DiagramError(f"edge {e.name} not a single arc")
        walked = {vi.seg for vi in visits}
        if walked != segs:
            raise DiagramError(f"edge {e.name} not a single arc")
    cycles = tuple(theta_cycles(d).values()) if d.mode == "theta" else ()
    return GraphStructure(tuple(names), d.edges, cycles)


# -------------------------------------------------------- cycle traversals

@dataclass(frozen=True)
class CuspPass:
    event: int
    direction: str


@dataclass(frozen=True)
class CrossingPass:
    event: int
    sign: int | None      # None when the other strand is outside the cycle
    partner: str          # 'self' or the other strand's edge


@dataclass(frozen=True)
class Corner:
    vertex: str
    direction: str | None   # None: the walk passes straight through


@dataclass(frozen=True)
class CycleTraversal:
    cycle: str
    items: tuple = field(default_factory=tuple)

    def cusps(self):
        return [it for it in self.items if isinstance(it, CuspPass)]

    def corners(self):
        return [it for it in self.items if isinstance(it, Corner)]

    def crossings(self):
        return [it for it in self.items if isinstance(it, CrossingPass)]


def _corner(d: FrontDiagram, v: str, e_in: str, e_out: str) -> Corner:
    s_in, k_in = _end_of(d, v, e_in)
    s_out, k_out = _end_of(d, v, e_out)
    if s_in != s_out:
        return Corner(v, None)
    return Corner(v, "down" if k_in > k_out else "up")


def _reverse_visits(vs: list[_Visit]) -> list[_Visit]:
    out = []
    for vi in reversed(vs):
        if vi.kind == "cusp":
            out.append(vi._replace(info="down" if vi.info == "up" else "up"))
        elif vi.kind == "cross":
            slot, dr = vi.info
            out.append(vi._replace(info=(slot, -dr)))
    return out


def _assemble(d: FrontDiagram, name: str, pieces: list) -> CycleTraversal:
    """Turn strand visits and corners into traversal items.

    A crossing whose both strands lie on the walk is reported once, at the
    first visit, with the sign from both traversal directions: in a front
    it is +1 when the strands move the same way horizontally.
    """
    dirs: dict[int, dict[int, int]] = {}
    for p in pieces:
        if isinstance(p, _Visit) and p.kind == "cross":
            slot, dr = p.info
            dirs.setdefault(p.event, {})[slot] = dr
    sw = d.sweep
    items, done = [], set()
    for p in pieces:
        if isinstance(p, Corner):
            items.append(p)
        elif p.kind == "cusp":
            items.append(CuspPass(p.event, p.info))
        elif p.kind == "cross":
            if p.event in done:
                continue
            done.add(p.event)
            both = dirs[p.event]
            if len(both) == 2:
                items.append(CrossingPass(p.event, 1 if both[0] == both[1] else -1, "self"))
            else:
                slot, _ = p.info
                other = sw.ins[p.event][1 - slot]
                items.append(CrossingPass(p.event, None, sw.label[other]))
    return CycleTraversal(name, tuple(items))


def trace_walk(d: FrontDiagram, walk: list[tuple[str, bool]], name: str = "") -> CycleTraversal:
    """Trace a closed walk given as (edge, forward) pairs."""
    pieces: list = []
    ends = []
    for e, fwd in walk:
        ed = d.edge(e)
        vs = _edge_walk(d, ed.v1, e)[:-1]
        if fwd:
            ends.append((ed.v1, ed.v2))
        else:
            vs = _reverse_visits(vs)
            ends.append((ed.v2, ed.v1))
        pieces.append(vs)
    out: list = []
    n = len(walk)
    for i in range(n):
        out += pieces[i]
        nxt = (i + 1) % n
        v = ends[i][1]
        if ends[nxt][0] != v:
            raise DiagramError("walk is not closed")
        out.append(_corner(d, v, walk[i][0], walk[nxt][0]))
    return _assemble(d, name, out)


def trace_cycle(d: FrontDiagram, c: str) -> CycleTraversal:
    """Walk cycle ``c`` ('C1', 'C2', 'C3') with its standard orientation:
    out of the first vertex along the first edge, back along the second."""
    if d.mode != "theta" or c not in CYCLES:
        raise DiagramError(f"cycle id {c!r} invalid for mode {d.mode}")
    x, y = theta_cycles(d)[c]
    return trace_walk(d, [(x, True), (y, False)], c)


def trace_knot(d: FrontDiagram, edge: str | None = None) -> CycleTraversal:
    """Trace a closed loop edge with its declared orientation."""
    e = d.edge(edge) if edge else d.edges[0]
    if not e.is_loop:
        raise DiagramError(f"edge {e.name} is not a closed loop")
    sw = d.sweep
    first = min(j for j, ev in enumerate(d.events)
                if isinstance(ev, LeftCusp) and ev.edge == e.name)
    s0 = sw.outs[first][0]
    vs = [vi for vi in _walk(d, s0, +1, stop_seg=s0)]
    if e.reversed:
        vs = _reverse_visits(vs)
    return _assemble(d, e.name, vs)


# ------------------------------------------------------------ cyclic order

def vertex_cyclic_order(d: FrontDiagram, v: str) -> tuple[str, ...]:
    """Cyclic edge order at ``v``: right-side ends top to bottom, then
    left-side ends top to bottom."""
    if v not in d.vertex_index:
        raise DiagramError(f"unknown vertex {v!r}")
    ends = _ends(d, v)
    right = [e for s, _, e in ends if s == "R"][::-1]
    left = [e for s, _, e in ends if s == "L"][::-1]
    return tuple(right + left)


def same_cyclic_order(a: tuple, b: tuple) -> bool:
    if len(a) != len(b):
        return False
    return any(tuple(b[i:] + b[:i]) == tuple(a) for i in range(len(b))) or not a
