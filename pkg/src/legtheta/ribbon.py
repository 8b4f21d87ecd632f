"""Transverse push-off of a Legendrian graph front, as an oriented link diagram.

Every graph strand is doubled into two copies running in opposite
directions.  Which copy lies on top (the left-moving or the right-moving
one) is fixed next to cusps and vertices:

    left cusp, vertex with strands only on its right,
    vertex of type 1/2                                  -> left-moving on top
    right cusp, vertex with strands only on its left,
    vertex of type 2/1                                  -> right-moving on top

Between two such events a strand gets one half-twist crossing when the
two ends disagree (the right-moving copy passes over).  Each cusp and
each one-sided vertex adds one negative kink, and each crossing of the
graph becomes four crossings of the copies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .diagram import (Crossing, DiagramError, FrontDiagram, LeftCusp,
                      RightCusp, Vertex, _edge_walk, _walk, same_cyclic_order,
                      theta_cycles, validate, vertex_cyclic_order)

__all__ = ["Cap", "Cup", "Cross", "LinkDiagram", "Component", "push_off",
           "components", "linking_matrix", "self_linking", "vertex_type",
           "crossing_signs", "expected_self_linking", "ORIGINS"]

ORIGINS = ("band", "cusp", "vertex", "inherited")


@dataclass(frozen=True)
class Cap:
    """Two new strands at ``level``, ``level + 1`` joined on the left."""
    level: int
    arity = (0, 2)


@dataclass(frozen=True)
class Cup:
    """Strands ``level``, ``level + 1`` joined on the right."""
    level: int
    arity = (2, 0)


@dataclass(frozen=True)
class Cross:
    """Strands ``level``, ``level + 1`` swap; ``over`` is 'falling' or 'rising'."""
    level: int
    over: str = "falling"
    origin: str | None = None
    arity = (2, 2)


class _LinkSweep(NamedTuple):
    left: list
    right: list
    ins: list
    outs: list
    dir: list       # +1 right-moving, -1 left-moving, per segment
    tag: list       # per segment: (edge, +1/-1 agreement with edge orientation), a tuple
                    # of such pairs when the segment runs through a vertex, or None


@dataclass(frozen=True)
class Component:
    index: int
    segments: tuple[int, ...]
    crossings: tuple[tuple[int, str], ...]    # (event, 'over'|'under') in walk order
    attribution: str | None = None            # e.g. 'C2', '~C1', '+k'


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link projection read as a left-to-right sweep word.

    ``dirs[j]`` gives the directions of the strands produced by event j;
    ``tags[j]`` optionally names the graph edge each produced strand copies,
    or several edges when the strand turns through a vertex.
    """
    events: tuple
    dirs: tuple
    tags: tuple = field(default=None, compare=False)
    edge_order: tuple = field(default=(), compare=False)

    @cached_property
    def sweep(self) -> _LinkSweep:
        left, right, ins, outs, dirs, tags = [], [], [], [], [], []
        strands: list[int] = []
        for j, ev in enumerate(self.events):
            p, q = ev.arity
            lvl = ev.level
            if not 0 <= lvl <= len(strands) - p:
                raise DiagramError(f"link event {j}: level {lvl} out of range")
            took = strands[lvl:lvl + p]
            for k, s in enumerate(took):
                right[s] = (j, k)
            made = []
            for k in range(q):
                left.append((j, k))
                right.append(None)
                dirs.append(self.dirs[j][k])
                tags.append(self.tags[j][k] if self.tags and self.tags[j] else None)
                made.append(len(left) - 1)
            if isinstance(ev, Cross):
                if dirs[took[0]] != dirs[made[1]] or dirs[took[1]] != dirs[made[0]]:
                    raise DiagramError(f"link event {j}: orientation breaks at crossing")
            elif len(took) == 2 and dirs[took[0]] == dirs[took[1]]:
                raise DiagramError(f"link event {j}: cup joins like-oriented strands")
            elif len(made) == 2 and dirs[made[0]] == dirs[made[1]]:
                raise DiagramError(f"link event {j}: cap joins like-oriented strands")
            ins.append(tuple(took))
            outs.append(tuple(made))
            strands[lvl:lvl + p] = made
        if strands:
            raise DiagramError("link sweep does not close up")
        return _LinkSweep(left, right, ins, outs, dirs, tags)

    @property
    def crossings(self) -> list[int]:
        return [j for j, ev in enumerate(self.events) if isinstance(ev, Cross)]

    @cached_property
    def signs(self) -> dict[int, int]:
        return crossing_signs(self)

    @cached_property
    def components(self) -> tuple[Component, ...]:
        return _trace_components(self)

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {s: c.index for c in self.components for s in c.segments}

    def crossing_components(self, j: int) -> tuple[int, int]:
        """(over component, under component) at crossing event j."""
        ev = self.events[j]
        lo, hi = self.sweep.ins[j]
        over, under = (hi, lo) if ev.over == "falling" else (lo, hi)
        return self.component_of[over], self.component_of[under]

    def origin_counts(self) -> dict[tuple[str, int], int]:
        out: dict = {}
        for j in self.crossings:
            key = (self.events[j].origin, self.signs[j])
            out[key] = out.get(key, 0) + 1
        return out

    def mirror(self) -> "LinkDiagram":
        flip = {"falling": "rising", "rising": "falling"}
        evs = tuple(Cross(e.level, flip[e.over], e.origin) if isinstance(e, Cross) else e
                    for e in self.events)
        return LinkDiagram(evs, self.dirs, self.tags, self.edge_order)


def crossing_signs(l: LinkDiagram) -> dict[int, int]:
    """Sign of every crossing: +1 when the over strand is reached from the
    under strand by a counterclockwise turn of less than a half turn."""
    sw = l.sweep
    out = {}
    for j in l.crossings:
        lo, hi = sw.ins[j]
        rise, fall = sw.dir[lo], sw.dir[hi]
        same = 1 if rise == fall else -1
        out[j] = same if l.events[j].over == "falling" else -same
    return out


def _step(l: LinkDiagram, seg: int, d: int):
    sw = l.sweep
    j, slot = sw.right[seg] if d > 0 else sw.left[seg]
    ev = l.events[j]
    if isinstance(ev, Cross):
        rising = slot == 0 if d > 0 else slot == 1
        role = "over" if (ev.over == "rising") == rising else "under"
        nxt = sw.outs[j][1 - slot] if d > 0 else sw.ins[j][1 - slot]
        return nxt, d, (j, role)
    nxt = sw.ins[j][1 - slot] if d > 0 else sw.outs[j][1 - slot]
    return nxt, -d, None


def _trace_components(l: LinkDiagram) -> tuple[Component, ...]:
    sw = l.sweep
    seen: set[int] = set()
    comps = []
    for s0 in range(len(sw.left)):     # segments are numbered in sweep order
        if s0 in seen:
            continue
        segs, xs = [], []
        s, d = s0, sw.dir[s0]
        while True:
            seen.add(s)
            segs.append(s)
            s, d, x = _step(l, s, d)
            if x:
                xs.append(x)
            if s == s0:
                break
            if sw.dir[s] != d:
                raise DiagramError("orientation inconsistent along a component")
        comps.append(Component(len(comps), tuple(segs), tuple(xs),
                               _attribute(l, segs)))
    return tuple(comps)


def tag_pairs(t) -> tuple:
    """The (edge, sign) pairs of one segment tag."""
    if t is None:
        return ()
    return t if isinstance(t[0], tuple) else (t,)


def _attribute(l: LinkDiagram, segs) -> str | None:
    seen: dict[str, set] = {}
    for s in segs:
        for e, sgn in tag_pairs(l.sweep.tag[s]):
            seen.setdefault(e, set()).add(sgn)
    if not seen or any(len(v) != 1 for v in seen.values()):
        return None
    return ",".join(f"{'+' if next(iter(v)) > 0 else '-'}{e}" for e, v in sorted(seen.items()))


# ------------------------------------------------------------- push-off

_RIGHT_TOP = +1
_LEFT_TOP = -1


def _graph_directions(d: FrontDiagram) -> dict[int, int]:
    """Direction in which each edge's orientation runs along each graph segment."""
    out = {}
    for e in d.edges:
        if e.is_loop:
            sw = d.sweep
            first = min(j for j, ev in enumerate(d.events)
                        if isinstance(ev, LeftCusp) and ev.edge == e.name)
            s0 = sw.outs[first][0]
            sgn = -1 if e.reversed else 1
            for vi in _walk(d, s0, +1, stop_seg=s0):
                out[vi.seg] = vi.dir * sgn
        else:
            for vi in _edge_walk(d, e.v1, e.name):
                out[vi.seg] = vi.dir
    return out


class _Builder:
    def __init__(self, d: FrontDiagram):
        self.d = d
        self.gdir = _graph_directions(d)
        self.events, self.dirs = [], []
        self.cd: list[int] = []       # copy directions, bottom to top
        self.cur: list[int] = []      # current link segment at each level
        self.nseg = 0
        self.tag: dict[int, tuple] = {}

    def emit(self, ev, dirs):
        self.events.append(ev)
        self.dirs.append(tuple(dirs))
        made = list(range(self.nseg, self.nseg + len(dirs)))
        self.nseg += len(dirs)
        return made

    def cap(self, k, lower):
        made = self.emit(Cap(k), (lower, -lower))
        self.cd[k:k] = [lower, -lower]
        self.cur[k:k] = made

    def cup(self, k):
        assert self.cd[k] == -self.cd[k + 1]
        self.emit(Cup(k), ())
        del self.cd[k:k + 2]
        del self.cur[k:k + 2]

    def cross(self, k, over, origin):
        rise, fall = self.cd[k], self.cd[k + 1]
        s_rise, s_fall = self.cur[k], self.cur[k + 1]
        lo, hi = self.emit(Cross(k, over, origin), (fall, rise))
        for old, new in ((s_fall, lo), (s_rise, hi)):
            if old in self.tag:
                self.tag[new] = self.tag[old]
        self.cd[k], self.cd[k + 1] = fall, rise
        self.cur[k], self.cur[k + 1] = lo, hi

    def set_top(self, i, want):
        """Half twist on graph strand i if its top copy is not ``want``."""
        k = 2 * i
        if self.cd[k + 1] == want:
            return
        over = "rising" if self.cd[k] > 0 else "falling"
        self.cross(k, over, "band")

    def mark(self, k, segs):
        """Tag the copies at levels k.. with the graph segments they follow."""
        sw = self.d.sweep
        for i, s in enumerate(segs):
            for c in (k + 2 * i, k + 2 * i + 1):
                pair = (sw.label[s], self.cd[c] * self.gdir[s])
                had = tag_pairs(self.tag.get(self.cur[c]))
                # a copy turning through a vertex keeps the edge it came from
                self.tag[self.cur[c]] = pair if not had or had == (pair,) else \
                    tuple(dict.fromkeys(had + (pair,)))

    def run(self) -> LinkDiagram:
        sw = self.d.sweep
        for j, ev in enumerate(self.d.events):
            l = ev.level
            k = 2 * l
            if isinstance(ev, LeftCusp):
                self.cap(k, -1)
                self.cross(k, "falling", "cusp")
                self.cap(k + 1, -1)
            elif isinstance(ev, RightCusp):
                self.set_top(l, _RIGHT_TOP)
                self.set_top(l + 1, _RIGHT_TOP)
                self.cup(k + 1)
                self.cross(k, "falling", "cusp")
                self.cup(k)
            elif isinstance(ev, Crossing):
                for off in (1, 0, 2, 1):
                    self.cross(k + off, "falling", "inherited")
            else:
                self._vertex(ev)
            self.mark(k, sw.outs[j])
        assert not self.cd
        tags, n = [], 0
        for dr in self.dirs:
            tags.append(tuple(self.tag.get(s) for s in range(n, n + len(dr))) or None)
            n += len(dr)
        return LinkDiagram(tuple(self.events), tuple(self.dirs), tuple(tags),
                           tuple(e.name for e in self.d.edges))

    def _vertex(self, ev: Vertex):
        l, p, q = ev.level, ev.left, ev.right
        k = 2 * l
        if p == 0:
            self.cap(k, -1)
            self.cross(k, "falling", "vertex")
            for i in range(1, q):
                self.cap(k + 2 * i - 1, -1)
        elif q == 0:
            for i in range(p):
                self.set_top(l + i, _RIGHT_TOP)
            for i in reversed(range(1, p)):
                self.cup(k + 2 * i - 1)
            self.cross(k, "falling", "vertex")
            self.cup(k)
        elif (p, q) == (1, 2):
            self.set_top(l, _LEFT_TOP)
            self.cap(k + 1, -1)
        elif (p, q) == (2, 1):
            self.set_top(l, _RIGHT_TOP)
            self.set_top(l + 1, _RIGHT_TOP)
            self.cup(k + 1)
        else:
            raise DiagramError(f"vertex {ev.name}: type {p}/{q} unsupported")


def push_off(d: FrontDiagram) -> LinkDiagram:
    validate(d)
    return _Builder(d).run()


# ------------------------------------------------------------ queries

def _cycle_name(l: LinkDiagram, attribution: str | None) -> str | None:
    """Turn '+e1,-e2' into 'C1' (first edge forward) or '~C1' (reversed)."""
    if attribution is None or len(l.edge_order) != 3:
        return attribution
    parts = attribution.split(",")
    if len(parts) != 2:
        return attribution
    idx = {e: i for i, e in enumerate(l.edge_order)}
    (sx, x), (sy, y) = sorted(((p[0], p[1:]) for p in parts), key=lambda t: idx[t[1]])
    if sx == sy:
        return attribution
    name = {(0, 1): "C1", (0, 2): "C2", (1, 2): "C3"}[(idx[x], idx[y])]
    return name if sx == "+" else "~" + name


def components(l: LinkDiagram) -> list[tuple[int, str | None]]:
    """Components in order of first appearance, each with the cycle it
    follows ('~C1' is C1 reversed) or, for a closed loop, '+k' / '-k'."""
    return [(c.index, _cycle_name(l, c.attribution)) for c in l.components]


def linking_matrix(l: LinkDiagram) -> np.ndarray:
    """Pairwise linking numbers; the diagonal holds each self-writhe."""
    n = len(l.components)
    m = np.zeros((n, n), dtype=np.int64)
    for j, sgn in l.signs.items():
        a, b = l.crossing_components(j)
        if a == b:
            m[a, a] += 2 * sgn
        else:
            m[a, b] += sgn
            m[b, a] += sgn
    assert not (m % 2).any(), "odd count of crossings between two components"
    return m // 2


def self_linking(l: LinkDiagram, component: int | str = "all") -> int:
    """Writhe of one component, or total writhe for ``'all'``."""
    if component == "all":
        return int(sum(l.signs.values()))
    if not isinstance(component, int) or not 0 <= component < len(l.components):
        raise ValueError(f"unknown component id {component!r}")
    return int(sum(sgn for j, sgn in l.signs.items()
                   if l.crossing_components(j) == (component, component)))


def expected_self_linking(iv, name: str | None) -> int | None:
    """sl of the push-off component following cycle ``name`` ('~C2' is C2
    reversed): tb - rot along the orientation the component runs."""
    if name is None or not name.lstrip("~").startswith("C"):
        return None
    k = int(name.lstrip("~")[1]) - 1
    sgn = -1 if name.startswith("~") else 1
    return iv.tb[k] - sgn * iv.rot[k]


def vertex_type(d: FrontDiagram) -> str:
    """'parallel' when both vertices carry the same cyclic edge order."""
    validate(d)
    if d.mode != "theta":
        raise DiagramError("vertex_type needs a theta diagram")
    (a, _), (b, _) = d.vertices
    same = same_cyclic_order(vertex_cyclic_order(d, a), vertex_cyclic_order(d, b))
    return "parallel" if same else "antiparallel"
