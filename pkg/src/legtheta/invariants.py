"""Thurston-Bennequin and rotation numbers of cycles in a front."""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (CYCLES, CycleTraversal, DiagramError, FrontDiagram,
                      Vertex, trace_cycle, trace_knot, validate)
from .ribbon import self_linking  # sl is read off the push-off front

__all__ = ["InvariantVector", "tb", "rot", "invariant_vector", "classify_R",
           "knot_invariants", "is_standard_form", "TABLE1", "self_linking"]


def _cusp_directions(t: CycleTraversal) -> list[str]:
    dirs = [c.direction for c in t.cusps()]
    dirs += [c.direction for c in t.corners() if c.direction is not None]
    return dirs


def tb(t: CycleTraversal) -> int:
    """Writhe minus half the cusp count; turning vertex corners count as cusps."""
    w = sum(c.sign for c in t.crossings() if c.sign is not None)
    n = len(_cusp_directions(t))
    assert n % 2 == 0, "odd cusp total on a closed walk"
    return w - n // 2


def rot(t: CycleTraversal) -> int:
    """Half of (down cusps - up cusps)."""
    dirs = _cusp_directions(t)
    diff = dirs.count("down") - dirs.count("up")
    assert diff % 2 == 0
    return diff // 2


@dataclass(frozen=True)
class InvariantVector:
    tb: tuple[int, int, int]
    rot: tuple[int, int, int]

    @property
    def R(self) -> int:
        r1, r2, r3 = self.rot
        return r1 - r2 + r3


def invariant_vector(d: FrontDiagram) -> InvariantVector:
    validate(d)
    ts = [trace_cycle(d, c) for c in CYCLES]
    return InvariantVector(tuple(tb(t) for t in ts), tuple(rot(t) for t in ts))


def knot_invariants(d: FrontDiagram, edge: str | None = None) -> tuple[int, int]:
    """(tb, rot) of a closed loop edge in knot mode."""
    validate(d)
    t = trace_knot(d, edge)
    return tb(t), rot(t)


def is_standard_form(d: FrontDiagram) -> bool:
    """First vertex has all three edges on its right with e1 on top, and
    the second vertex has all three on its left."""
    (a, _), (b, _) = d.vertices
    va = d.events[d.vertex_index[a]]
    vb = d.events[d.vertex_index[b]]
    names = tuple(e.name for e in d.edges)
    return (va.left, va.right) == (0, 3) and va.labels == names[::-1] \
        and (vb.left, vb.right) == (3, 0)


# Table 1: up/down type of the corner at b for (C1, C2, C3) -> case.
TABLE1 = {
    ("down", "down", "down"): 1,
    ("down", "down", "up"): 2,
    ("down", "up", "down"): 3,
    ("down", "up", "up"): 4,
    ("up", "down", "down"): 5,
    ("up", "down", "up"): 6,
    ("up", "up", "down"): 7,
    ("up", "up", "up"): 8,
}


def classify_R(d: FrontDiagram) -> tuple[int, int]:
    """Table-1 case id and R, read from the corners at the second vertex."""
    validate(d)
    if d.mode != "theta" or not is_standard_form(d):
        raise DiagramError("non-standard vertex neighborhoods: classify_R needs "
                           "all edges right of the first vertex and left of the second")
    b = d.vertices[1][0]
    key = []
    for c in CYCLES:
        corner = [k for k in trace_cycle(d, c).corners() if k.vertex == b][0]
        key.append(corner.direction)
    case = TABLE1[tuple(key)]
    if case in (3, 6):
        raise AssertionError(f"impossible Table-1 row {case} observed")
    return case, invariant_vector(d).R
