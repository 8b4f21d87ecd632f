"""Legendrian isotopy moves on front event words.

Each move replaces a short contiguous subword by another with the same
boundary.  Levels below are relative to a base level k; ``e`` is an edge
label and V(k, p, q) a vertex with p strands on the left, q on the right.

planar   two adjacent events on disjoint levels trade places
I+       (nothing)  <->  L(k+1,e) X(k) R(k+1)          e = label of strand k
I-       (nothing)  <->  L(k,e) X(k+1) R(k)
II       L(k+1,e)   <->  L(k,e) X(k+1) X(k)            strand k passes a left cusp
         L(k,e)     <->  L(k+1,e) X(k) X(k+1)
         R(k+1)     <->  X(k) X(k+1) R(k)
         R(k)       <->  X(k+1) X(k) R(k+1)
III      X(k) X(k+1) X(k)  <->  X(k+1) X(k) X(k+1)
IV       V(k,0,q) L(k,e)    <->  L(k,e) V(k+1,0,q) X(k+q) ... X(k+1)
         V(k,0,q) L(k+q,e)  <->  L(k,e) V(k+1,0,q) X(k) ... X(k+q-1)
         R(k) V(k,q,0)      <->  X(k+1) ... X(k+q) V(k+1,q,0) R(k)
         R(k+q) V(k,q,0)    <->  X(k+q-1) ... X(k) V(k+1,q,0) R(k)
V        X(k+p-1) ... X(k) V(k+1,p,q)  <->  V(k,p,q) X(k+q-1) ... X(k)
         X(k) ... X(k+p-1) V(k,p,q)    <->  V(k+1,p,q) X(k) ... X(k+q-1)
VI       V(k,p,q; ..,e)  <->  L(k,e) X(k+1) ... X(k+p) V(k,p+1,q-1; ..)
         V(k,p,q; e,..)  <->  L(k+p,e) X(k+p-1) ... X(k) V(k+1,p+1,q-1; ..)
         V(k,p,q)        <->  V(k,p-1,q+1; e,..) X(k+q) ... X(k+1) R(k)
         V(k,p,q)        <->  V(k+1,p-1,q+1; ..,e) X(k) ... X(k+q-1) R(k+q)
         (the end turns from top right to bottom left, bottom right to top
         left, top left to bottom right, bottom left to top right)

Move IV carries a vertex through a cusp (the cusp branch crosses every
edge on the open side).  Move V carries a strand across a vertex.  Move
VI turns an edge end through the vertical direction, trading a turning
vertex corner for an ordinary cusp.  Every rule is listed with its
reflections; each site can be applied in either direction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import (Crossing, DiagramError, FrontDiagram, LeftCusp,
                      RightCusp, Vertex)

__all__ = ["MoveSite", "StaleSiteError", "enumerate_moves", "apply_move",
           "invert_site", "random_walk", "WalkResult", "stabilize", "standardize",
           "KINDS"]

KINDS = ("planar", "I+", "I-", "II", "III", "IV", "V", "VI")


class StaleSiteError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    kind: str
    variant: str
    index: int
    before: tuple
    after: tuple

    def describe(self) -> str:
        b = "; ".join(e.text() for e in self.before) or "-"
        a = "; ".join(e.text() for e in self.after) or "-"
        return f"{self.kind}/{self.variant} @{self.index}: {b} => {a}"


def invert_site(s: MoveSite) -> MoveSite:
    """The site that undoes ``s`` in the rewritten diagram."""
    if s.kind == "planar":
        v = s.variant
    else:
        v = s.variant[:-4] if s.variant.endswith(".inv") else s.variant + ".inv"
    return MoveSite(s.kind, v, s.index, s.after, s.before)


def apply_move(d: FrontDiagram, s: MoveSite) -> FrontDiagram:
    n = len(s.before)
    if d.events[s.index:s.index + n] != s.before:
        raise StaleSiteError(f"stale site: {s.describe()}")
    return d.replace_events(d.events[:s.index] + s.after + d.events[s.index + n:])


# ----------------------------------------------------------- helpers

def _lv(ev, level):
    if isinstance(ev, LeftCusp):
        return LeftCusp(level, ev.edge)
    if isinstance(ev, RightCusp):
        return RightCusp(level)
    if isinstance(ev, Crossing):
        return Crossing(level)
    return Vertex(ev.name, level, ev.left, ev.right, ev.labels)


def _xs(levels):
    return tuple(Crossing(k) for k in levels)


def _slices(d: FrontDiagram) -> list[list[str]]:
    """Edge labels of the strands before each event (and at the end)."""
    sw = d.sweep
    cur: list[str] = []
    out = []
    for j, ev in enumerate(d.events):
        out.append(cur)
        p = ev.arity[0]
        cur = cur[:ev.level] + [sw.label[s] for s in sw.outs[j]] + cur[ev.level + p:]
    out.append(cur)
    return out


def _both(kind, variant, i, before, after):
    """Forward site for ``before`` found at i."""
    return MoveSite(kind, variant, i, tuple(before), tuple(after))


# ----------------------------------------------------------- enumeration

def _kink(kind, i, k, e):
    if kind == "I+":
        return _both("I+", "ins", i, (), (LeftCusp(k + 1, e), Crossing(k), RightCusp(k + 1)))
    return _both("I-", "ins", i, (), (LeftCusp(k, e), Crossing(k + 1), RightCusp(k)))


def enumerate_moves(d: FrontDiagram, insertions: bool = True) -> list[MoveSite]:
    """All move sites of ``d`` in event order.  ``insertions=False`` leaves
    out the kink insertions of move I, which exist on every strand."""
    ev = d.events
    n = len(ev)
    sl = _slices(d)
    out: list[MoveSite] = []
    add = out.append

    for i in range(n + 1):
        w = len(sl[i])
        if insertions:
            for k in range(w):
                add(_kink("I+", i, k, sl[i][k]))
                add(_kink("I-", i, k, sl[i][k]))
        if i == n:
            break
        a = ev[i]
        b = ev[i + 1] if i + 1 < n else None
        c = ev[i + 2] if i + 2 < n else None

        # planar isotopy
        if b is not None:
            (p1, q1), (p2, q2) = a.arity, b.arity
            l1, l2 = a.level, b.level
            if l2 + p2 <= l1:
                add(_both("planar", "swap", i, (a, b), (b, _lv(a, l1 + q2 - p2))))
            if l2 >= l1 + q1:
                add(_both("planar", "swap", i, (a, b), (_lv(b, l2 - q1 + p1), a)))

        # I: remove kinks
        if isinstance(a, LeftCusp) and c is not None:
            k = a.level
            if (b, c) == (Crossing(k - 1), RightCusp(k)) and k >= 1 and sl[i][k - 1] == a.edge:
                add(_both("I+", "ins.inv", i, (a, b, c), ()))
            if (b, c) == (Crossing(k + 1), RightCusp(k)) and k < w and sl[i][k] == a.edge:
                add(_both("I-", "ins.inv", i, (a, b, c), ()))

        # II
        if isinstance(a, LeftCusp):
            k = a.level
            if k >= 1:
                add(_both("II", "a", i, (a,), (LeftCusp(k - 1, a.edge), Crossing(k), Crossing(k - 1))))
            if k < w:
                add(_both("II", "b", i, (a,), (LeftCusp(k + 1, a.edge), Crossing(k), Crossing(k + 1))))
            if c is not None:
                if (b, c) == (Crossing(k + 1), Crossing(k)):
                    add(_both("II", "a.inv", i, (a, b, c), (LeftCusp(k + 1, a.edge),)))
                if k >= 1 and (b, c) == (Crossing(k - 1), Crossing(k)):
                    add(_both("II", "b.inv", i, (a, b, c), (LeftCusp(k - 1, a.edge),)))
        if isinstance(a, RightCusp):
            k = a.level
            if k >= 1:
                add(_both("II", "c", i, (a,), (Crossing(k - 1), Crossing(k), RightCusp(k - 1))))
            if k + 2 < w:
                add(_both("II", "d", i, (a,), (Crossing(k + 1), Crossing(k), RightCusp(k + 1))))
        if isinstance(a, Crossing) and isinstance(c, RightCusp) and isinstance(b, Crossing):
            k = a.level
            if (b, c) == (Crossing(k + 1), RightCusp(k)):
                add(_both("II", "c.inv", i, (a, b, c), (RightCusp(k + 1),)))
            if k >= 1 and (b, c) == (Crossing(k - 1), RightCusp(k)):
                add(_both("II", "d.inv", i, (a, b, c), (RightCusp(k - 1),)))

        # III
        if isinstance(a, Crossing) and isinstance(b, Crossing) and isinstance(c, Crossing):
            k = a.level
            if b.level == k + 1 and c.level == k:
                add(_both("III", "a", i, (a, b, c), _xs((k + 1, k, k + 1))))
            if b.level == k - 1 and c.level == k:
                add(_both("III", "a.inv", i, (a, b, c), _xs((k - 1, k, k - 1))))

        if isinstance(a, Vertex):
            _vertex_sites(ev, sl, i, add)
        if isinstance(a, LeftCusp):
            _vi_inverse_sites(ev, i, add)
            if isinstance(b, Vertex):
                _cusp_vertex_sites(ev, sl, i, add)
    return out


def _match(ev, i, pattern) -> bool:
    m = len(pattern)
    return i >= 0 and i + m <= len(ev) and tuple(ev[i:i + m]) == tuple(pattern)


def _vertex_sites(ev, sl, j, add):
    v = ev[j]
    k, p, q = v.level, v.left, v.right
    w = len(sl[j])
    nxt = ev[j + 1] if j + 1 < len(ev) else None
    # V, strand passing over the vertex (descending)
    if k >= 1:
        lhs = _xs(range(k - 1 + p - 1, k - 2, -1)) + (v,)
        if _match(ev, j - p, lhs):
            add(_both("V", "over", j - p, lhs, (_lv(v, k - 1),) + _xs(range(k - 1 + q - 1, k - 2, -1))))
    rhs = (v,) + _xs(range(k + q - 1, k - 1, -1))
    if q and _match(ev, j, rhs) or (not q and k + p < w):
        lhs = _xs(range(k + p - 1, k - 1, -1)) + (_lv(v, k + 1),)
        add(_both("V", "over.inv", j, rhs, lhs))
    # V, strand passing under the vertex (ascending)
    lhs = _xs(range(k, k + p)) + (v,)
    if (p and _match(ev, j - p, lhs)) or (not p and k < w):
        add(_both("V", "under", j - p, lhs, (_lv(v, k + 1),) + _xs(range(k, k + q))))
    if k >= 1:
        rhs = (v,) + _xs(range(k - 1, k - 1 + q))
        if _match(ev, j, rhs):
            add(_both("V", "under.inv", j, rhs, _xs(range(k - 1, k - 1 + p)) + (_lv(v, k - 1),)))

    # IV, cusp on the open side of a one-sided vertex
    if p == 0 and isinstance(nxt, LeftCusp):
        if nxt.level == k:
            add(_both("IV", "a", j, (v, nxt),
                      (LeftCusp(k, nxt.edge), _lv(v, k + 1)) + _xs(range(k + q, k, -1))))
        if nxt.level == k + q:
            add(_both("IV", "b", j, (v, nxt),
                      (LeftCusp(k, nxt.edge), _lv(v, k + 1)) + _xs(range(k, k + q))))
    if q == 0 and j >= 1 and isinstance(ev[j - 1], RightCusp):
        r = ev[j - 1]
        if r.level == k:
            add(_both("IV", "c", j - 1, (r, v),
                      _xs(range(k + 1, k + p + 1)) + (_lv(v, k + 1), RightCusp(k))))
        if r.level == k + p:
            add(_both("IV", "d", j - 1, (r, v),
                      _xs(range(k + p - 1, k - 1, -1)) + (_lv(v, k + 1), RightCusp(k))))
    # IV inverses end at a right cusp after the vertex
    if q == 0 and k >= 1 and isinstance(nxt, RightCusp) and nxt.level == k - 1:
        c_ = _xs(range(k, k + p))
        if _match(ev, j - p, c_):
            add(_both("IV", "c.inv", j - p, c_ + (v, nxt), (RightCusp(k - 1), _lv(v, k - 1))))
        d_ = _xs(range(k - 2 + p, k - 2, -1))
        if _match(ev, j - p, d_):
            add(_both("IV", "d.inv", j - p, d_ + (v, nxt), (RightCusp(k - 1 + p), _lv(v, k - 1))))

    # VI: an edge end turns through the vertical to the other side
    labs = v.labels
    if q >= 1:
        add(_both("VI", "a", j, (v,), (LeftCusp(k, labs[-1]),) + _xs(range(k + 1, k + p + 1))
                  + (Vertex(v.name, k, p + 1, q - 1, labs[:-1]),)))
        add(_both("VI", "b", j, (v,), (LeftCusp(k + p, labs[0]),) + _xs(range(k + p - 1, k - 1, -1))
                  + (Vertex(v.name, k + 1, p + 1, q - 1, labs[1:]),)))
    if p >= 1:
        top, bot = sl[j][k + p - 1], sl[j][k]
        add(_both("VI", "c", j, (v,), (Vertex(v.name, k, p - 1, q + 1, (top,) + labs),)
                  + _xs(range(k + q, k, -1)) + (RightCusp(k),)))
        add(_both("VI", "d", j, (v,), (Vertex(v.name, k + 1, p - 1, q + 1, labs + (bot,)),)
                  + _xs(range(k, k + q)) + (RightCusp(k + q),)))
    if q >= 1:
        c_ = _xs(range(k + q - 1, k, -1))
        if _match(ev, j + 1, c_ + (RightCusp(k),)):
            add(_both("VI", "c.inv", j, (v,) + c_ + (RightCusp(k),),
                      (Vertex(v.name, k, p + 1, q - 1, labs[1:]),)))
        d_ = _xs(range(k - 1, k + q - 2))
        if k >= 1 and _match(ev, j + 1, d_ + (RightCusp(k + q - 2),)):
            add(_both("VI", "d.inv", j, (v,) + d_ + (RightCusp(k + q - 2),),
                      (Vertex(v.name, k - 1, p + 1, q - 1, labs[:-1]),)))


def _vi_inverse_sites(ev, i, add):
    """L(k,e) X.. V with the cusp branch wrapping the vertex's left ends."""
    c = ev[i]
    K = c.level
    for step in (1, -1):
        m = i + 1
        while m < len(ev) and ev[m] == Crossing(K + step * (m - i - 1) + (1 if step > 0 else -1)):
            m += 1
        for r in range(m - i - 1, -1, -1):
            vj = i + 1 + r
            if vj >= len(ev) or not isinstance(ev[vj], Vertex):
                continue
            v = ev[vj]
            if v.left != r + 1:
                continue
            if step > 0 and v.level == K:
                add(_both("VI", "a.inv", i, tuple(ev[i:vj + 1]),
                          (Vertex(v.name, K, r, v.right + 1, v.labels + (c.edge,)),)))
            if step < 0 and v.level == K - r + 1:
                add(_both("VI", "b.inv", i, tuple(ev[i:vj + 1]),
                          (Vertex(v.name, K - r, r, v.right + 1, (c.edge,) + v.labels),)))


def _cusp_vertex_sites(ev, sl, i, add):
    c, v = ev[i], ev[i + 1]
    k = c.level
    # IV inverses: cusp, vertex inside it, then crossings
    if v.left == 0 and v.level == k + 1:
        q = v.right
        a_ = _xs(range(k + q, k, -1))
        if _match(ev, i + 2, a_):
            add(_both("IV", "a.inv", i, (c, v) + a_, (_lv(v, k), LeftCusp(k, c.edge))))
        b_ = _xs(range(k, k + q))
        if _match(ev, i + 2, b_):
            add(_both("IV", "b.inv", i, (c, v) + b_, (_lv(v, k), LeftCusp(k + q, c.edge))))


# ----------------------------------------------------------- random walks

@dataclass(frozen=True)
class WalkResult:
    diagram: FrontDiagram
    trace: tuple
    stopped_early: bool = False


def random_walk(d: FrontDiagram, steps: int, seed: int, check=None) -> WalkResult:
    """Apply ``steps`` random moves.  A move kind is drawn uniformly among
    the kinds with a site, then a site of that kind uniformly.

    The generator is numpy's PCG64 seeded with ``seed``.  ``check`` is an
    optional callable run on every intermediate diagram.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    trace = []
    for _ in range(steps):
        # kink insertions are numerous and uniform, so they are indexed
        # rather than built
        sl = _slices(d)
        slots = [(i, k) for i, row in enumerate(sl) for k in range(len(row))]
        by_kind: dict[str, list] = {}
        for s in enumerate_moves(d, insertions=False):
            by_kind.setdefault(s.kind, []).append(s)
        size = {k: len(by_kind.get(k, ())) + (len(slots) if k in ("I+", "I-") else 0)
                for k in KINDS}
        kinds = [k for k in KINDS if size[k]]
        if not kinds:
            return WalkResult(d, tuple(trace), True)
        kind = kinds[int(rng.integers(len(kinds)))]
        pick = int(rng.integers(size[kind]))
        pool = by_kind.get(kind, [])
        if pick < len(pool):
            s = pool[pick]
        else:
            i, k = slots[pick - len(pool)]
            s = _kink(kind, i, k, sl[i][k])
        d = apply_move(d, s)
        trace.append(s)
        if check is not None:
            check(d, trace)
    return WalkResult(d, tuple(trace), False)


# ----------------------------------------------------------- standard form

def _apply_named(d, kind, variant, index, trace):
    for s in enumerate_moves(d):
        if (s.kind, s.variant, s.index) == (kind, variant, index):
            trace.append(s)
            return apply_move(d, s)
    raise AssertionError(f"no {kind}/{variant} site at {index}")


def standardize(d: FrontDiagram) -> tuple[FrontDiagram, tuple]:
    """Bring a theta diagram into standard form by moves VI only: every
    edge leaves the first vertex to the right, with e1 on top, and enters
    the second from the left.  Returns the diagram and the move trace."""
    if d.mode != "theta":
        raise DiagramError("standardize needs a theta diagram")
    (a, _), (b, _) = d.vertices
    names = tuple(e.name for e in d.edges)
    trace: list = []

    def vx(name):
        j = d.vertex_index[name]
        return j, d.events[j]

    j, v = vx(a)
    while v.left:
        d = _apply_named(d, "VI", "c", j, trace)
        j, v = vx(a)
    if v.labels not in (names[::-1], names[1::-1] + names[:1:-1], names[:1] + names[:0:-1]):
        raise DiagramError("cyclic order at the first vertex is opposite to e1, e2, e3; "
                           "no standard form with e1 on top exists")
    while v.labels != names[::-1]:
        d = _apply_named(d, "VI", "a", j, trace)
        j, v = vx(a)
        d = _apply_named(d, "VI", "c", j, trace)
        j, v = vx(a)
    j, v = vx(b)
    while v.right:
        d = _apply_named(d, "VI", "a", j, trace)
        j, v = vx(b)
    return d, tuple(trace)


# ----------------------------------------------------------- stabilization

def stabilize(d: FrontDiagram, edge: str, sign: int, occurrence: int = 0) -> FrontDiagram:
    """Insert a zigzag on ``edge``.  ``sign`` = +1 gives two down cusps when
    the edge is traversed along its orientation, -1 two up cusps.
    The zigzag goes right after the ``occurrence``-th event that emits a
    strand of the edge."""
    from .ribbon import _graph_directions
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    gd = _graph_directions(d)
    sw = d.sweep
    seen = 0
    for j in range(len(d.events)):
        for slot, s in enumerate(sw.outs[j]):
            if sw.label[s] != edge:
                continue
            if seen < occurrence:
                seen += 1
                continue
            k = d.events[j].level + slot
            rightward = gd[s] > 0
            up = (sign > 0) != rightward      # zigzag shape whose cusps point up along the strand
            z = [LeftCusp(k + 1, edge), RightCusp(k)] if up else [LeftCusp(k, edge), RightCusp(k + 1)]
            return d.replace_events(d.events[:j + 1] + tuple(z) + d.events[j + 1:])
    raise DiagramError(f"edge {edge!r} has no strand to stabilize")
