"""Realizing prescribed (tb, rot) data by explicit fronts.

Every realizable θ-graph is built from one template.  The first vertex
emits e1, e2, e3 (top to bottom).  Each edge first receives plain
stabilizations.  Three twist blocks follow, acting on the top pair, the
bottom pair and the top pair again.  A block may open with a Z-swap (a
zigzag that carries one strand across its neighbour, adding a positive
crossing and one stabilization) and then holds some negative crossings.
The second vertex absorbs all three strands from the left.

With P_j plain stabilizations, Z_j stabilizations from Z-swaps and
u_i = 1 when the second edge of cycle i sits above the first at b:

    rot_1 = s_1 - s_2 - u_1,  rot_2 = s_1 - s_3 - u_2,  rot_3 = s_2 - s_3 - u_3
    -1 - tb_i = K_x + K_y + (negative crossings) - (positive crossings)

where s_j = P_j + Z_j and K_j = |P_j| + |Z_j| counts zigzags on edge j.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .diagram import (Crossing, Edge, FrontDiagram, LeftCusp, RightCusp,
                      Vertex, same_cyclic_order, trace_walk,
                      vertex_cyclic_order, validate)
from .invariants import InvariantVector, invariant_vector, knot_invariants

__all__ = ["acceptable", "standard_unknot", "unknot_parameters",
           "theta_realizable", "realization_condition", "RealizationPlan",
           "plan_theta", "realize_theta", "distinguish_by_cyclic_order",
           "NotRealizable", "ClosedLoopError", "EDGE_NAMES", "counterexample_pair"]

EDGE_NAMES = ("e1", "e2", "e3")
_PAIR = {(0, 1): 0, (0, 2): 1, (1, 2): 2}


class NotRealizable(ValueError):
    pass


class ClosedLoopError(AssertionError):
    """Recomputed invariants differ from the request: a convention bug."""


def acceptable(tb: int, rot: int) -> bool:
    return tb + abs(rot) <= -1 and (tb + rot) % 2 == 1


def unknot_parameters(tb: int, rot: int) -> tuple[int, int]:
    """(t, s): number of full twists and of stabilizations."""
    if not acceptable(tb, rot):
        raise NotRealizable(f"acceptable fails for (tb, rot) = ({tb}, {rot})")
    if rot > 0:
        return -(tb + rot + 1) // 2, rot
    if rot < 0:
        return -(tb - rot + 1) // 2, -rot
    return -(tb + 1) // 2, 0


def standard_unknot(tb: int, rot: int, name: str = "k") -> FrontDiagram:
    """Standard unknot: two cusps, 2t negative crossings between the two
    branches and s stabilizations on the lower branch.  For rot < 0 the
    orientation is reversed so the leftmost cusp is traversed upward."""
    t, s = unknot_parameters(tb, rot)
    events = [LeftCusp(0, name)]
    for _ in range(s):
        events += [LeftCusp(0, name), RightCusp(1)]
    events += [Crossing(0)] * (2 * t) + [RightCusp(0)]
    d = FrontDiagram("knot", (), (Edge(name, None, None, rot < 0),), tuple(events))
    got = knot_invariants(d)
    if got != (tb, rot):
        raise ClosedLoopError(f"standard unknot gave {got}, wanted {(tb, rot)}")
    return d


def realization_condition(rotv) -> int | None:
    """Lowest-numbered of the six case conditions that holds."""
    r1, r2, r3 = (abs(r) for r in rotv)
    conds = (r1 >= r2 + r3, r2 >= r1 + r3, r3 >= r1 + r2,
             r1 + 1 == r2 + r3, r2 + 1 == r1 + r3, r3 + 1 == r1 + r2)
    for k, ok in enumerate(conds, 1):
        if ok:
            return k
    return None


def theta_realizable(tbv, rotv) -> tuple[bool, int | None, str]:
    """(realizable, condition number, reason)."""
    for i, (t, r) in enumerate(zip(tbv, rotv), 1):
        if not acceptable(t, r):
            return False, None, f"acceptable fails for cycle {i}: (tb, rot) = ({t}, {r})"
    R = rotv[0] - rotv[1] + rotv[2]
    if R not in (0, -1):
        return False, None, f"R = rot1 - rot2 + rot3 = {R} is not in {{0, -1}}"
    cond = realization_condition(rotv)
    assert cond is not None, "one of the six conditions always holds here"
    return True, cond, "ok"


@dataclass(frozen=True)
class RealizationPlan:
    case: int                              # lowest satisfied condition (1..6)
    r: tuple[int, int, int]                # |rot_i|
    stabilizations: tuple[int, int, int]   # signed plain zigzags per edge
    zswaps: tuple[int, int, int]           # per block: 0, +1 (upper moves down), -1 (lower moves up)
    twists: tuple[int, int, int]           # negative crossings per block

    @property
    def s(self) -> tuple[int, ...]:
        z = [0, 0, 0]
        for edge, dz in self._z_moves():
            z[edge] += dz
        return tuple(p + q for p, q in zip(self.stabilizations, z))

    def _z_moves(self):
        order = [0, 1, 2]
        for k, (z, n) in enumerate(zip(self.zswaps, self.twists)):
            i = 0 if k != 1 else 1
            x, y = order[i], order[i + 1]
            if z:
                yield (x, 1) if z == 1 else (y, -1)
                order[i], order[i + 1] = y, x
            if n % 2:
                order[i], order[i + 1] = order[i + 1], order[i]


def _search(tbv, rotv):
    T = [-1 - t for t in tbv]
    combos = sorted(itertools.product(itertools.product((0, 1), repeat=3),
                                      itertools.product((0, 1, -1), repeat=3)),
                    key=lambda c: (sum(map(abs, c[1])), c))
    for par, zs in combos:
        order = [0, 1, 2]          # edge indices, top to bottom
        zst = [0, 0, 0]
        pos = [0, 0, 0]
        blocks = []
        for k, (bp, z) in enumerate(zip(par, zs)):
            i = 0 if k != 1 else 1
            x, y = order[i], order[i + 1]
            ci = _PAIR[tuple(sorted((x, y)))]
            if z == 1:
                zst[x] += 1
            elif z == -1:
                zst[y] -= 1
            pos[ci] += abs(z)
            blocks.append((ci, bp))
            if (abs(z) + bp) % 2:
                order[i], order[i + 1] = y, x
        at = {v: k for k, v in enumerate(order)}
        u = [int(at[1] < at[0]), int(at[2] < at[0]), int(at[2] < at[1])]
        if rotv[0] - rotv[1] + rotv[2] != -u[0] + u[1] - u[2]:
            continue
        for t in sorted(range(-16, 17), key=lambda v: (abs(v), -v)):
            s = [t, t - rotv[0] - u[0], t - rotv[1] - u[1]]
            P = [s[j] - zst[j] for j in range(3)]
            K = [abs(P[j]) + abs(zst[j]) for j in range(3)]
            need = [T[0] - K[0] - K[1] + pos[0], T[1] - K[0] - K[2] + pos[1],
                    T[2] - K[1] - K[2] + pos[2]]
            counts = [0, 0, 0]
            ok = True
            for ci in range(3):
                bl = [k for k, (c, _) in enumerate(blocks) if c == ci]
                n = need[ci]
                base = sum(blocks[k][1] for k in bl)
                if not bl:
                    ok = n == 0
                elif n < base or (n - base) % 2:
                    ok = False
                else:
                    counts[bl[0]] = n - base + blocks[bl[0]][1]
                    for k in bl[1:]:
                        counts[k] = blocks[k][1]
                if not ok:
                    break
            if ok:
                return tuple(P), tuple(zs), tuple(counts)
    return None


def plan_theta(tbv, rotv) -> RealizationPlan:
    ok, cond, why = theta_realizable(tbv, rotv)
    if not ok:
        raise NotRealizable(why)
    found = _search(tuple(tbv), tuple(rotv))
    if found is None:
        raise ClosedLoopError(f"no template parameters for tb={tbv} rot={rotv}")
    P, zs, counts = found
    assert all(c >= 0 for c in counts)
    return RealizationPlan(cond, tuple(abs(r) for r in rotv), P, zs, counts)


def _events(plan: RealizationPlan) -> list:
    ev = [Vertex("a", 0, 0, 3, EDGE_NAMES[::-1])]
    # plain zigzags; edge j sits at level 2 - j.  Positive ones have down
    # cusps when traversed from a to b.
    for j, p in enumerate(plan.stabilizations):
        k = 2 - j
        for _ in range(abs(p)):
            ev += [LeftCusp(k, EDGE_NAMES[j]), RightCusp(k + 1)] if p > 0 \
                else [LeftCusp(k + 1, EDGE_NAMES[j]), RightCusp(k)]
    order = [0, 1, 2]
    for blk, (z, n) in enumerate(zip(plan.zswaps, plan.twists)):
        i = 0 if blk != 1 else 1
        k = 1 - i                      # level of the lower strand of the pair
        x, y = order[i], order[i + 1]
        if z == 1:       # upper strand x zigzags down across y
            ev += [LeftCusp(k, EDGE_NAMES[x]), Crossing(k + 1), RightCusp(k + 2)]
            order[i], order[i + 1] = y, x
        elif z == -1:    # lower strand y zigzags up across x
            ev += [LeftCusp(k + 2, EDGE_NAMES[y]), Crossing(k + 1), RightCusp(k)]
            order[i], order[i + 1] = y, x
        ev += [Crossing(k)] * n
        if n % 2:
            order[i], order[i + 1] = order[i + 1], order[i]
    ev.append(Vertex("b", 0, 3, 0))
    return ev


def _theta(events, names=EDGE_NAMES) -> FrontDiagram:
    return FrontDiagram("theta", (("a", 3), ("b", 3)),
                        tuple(Edge(n, "a", "b") for n in names), tuple(events))


def realize_theta(tbv, rotv, names=EDGE_NAMES) -> FrontDiagram:
    """Front of a planar θ-graph with the given invariant vector.

    The recomputed invariants must equal the request exactly; otherwise
    :class:`ClosedLoopError` is raised.
    """
    tbv, rotv = tuple(tbv), tuple(rotv)
    plan = plan_theta(tbv, rotv)
    events = _events(plan)
    if tuple(names) != EDGE_NAMES:
        ren = dict(zip(EDGE_NAMES, names))
        events = [LeftCusp(e.level, ren[e.edge]) if isinstance(e, LeftCusp)
                  else Vertex(e.name, e.level, e.left, e.right,
                              tuple(ren[x] for x in e.labels)) if isinstance(e, Vertex)
                  else e for e in events]
    d = _theta(events, names)
    got = invariant_vector(d)
    if got != InvariantVector(tbv, rotv):
        raise ClosedLoopError(f"realization of tb={tbv} rot={rotv} recomputes to {got}")
    return d


@lru_cache(maxsize=None)
def _cached_plan(tbv, rotv):
    return plan_theta(tbv, rotv)


# ----------------------------------------------------------- Example 3.6

def _walk_inv(d, x, y, forward):
    from .invariants import rot as _rot, tb as _tb
    w = [(x, True), (y, False)] if forward else [(y, True), (x, False)]
    t = trace_walk(d, w)
    return _tb(t), _rot(t)


def counterexample_pair(tbv=(-1, -5, -3), rotv=(0, 0, 0)) -> tuple[FrontDiagram, FrontDiagram]:
    """Two fronts with equal invariant vectors and opposite cyclic orders.

    G is the realization; G' is G turned upside down with edges renamed
    e1 -> f2, e2 -> f1, e3 -> f3 and listed as (f2, f1, f3), so that the
    cycles of G' are {f2, f1}, {f2, f3}, {f1, f3}.  Turning the front over
    negates rot, so the vectors agree only when rot vanishes.
    """
    g = realize_theta(tbv, rotv)
    ren = {"e1": "f2", "e2": "f1", "e3": "f3"}
    flip = g.flipped()
    events = [LeftCusp(e.level, ren[e.edge]) if isinstance(e, LeftCusp)
              else Vertex(e.name, e.level, e.left, e.right, tuple(ren[x] for x in e.labels))
              if isinstance(e, Vertex) else e for e in flip.events]
    return g, _theta(events, ("f2", "f1", "f3"))


def distinguish_by_cyclic_order(d1: FrontDiagram, d2: FrontDiagram) -> str:
    """Compare cyclic edge orders under every graph isomorphism that
    carries the oriented cycle invariants of ``d1`` onto those of ``d2``.
    """
    validate(d1)
    validate(d2)
    e1 = [e.name for e in d1.edges]
    e2 = [e.name for e in d2.edges]
    (a1, _), (b1, _) = d1.vertices
    (a2, _), (b2, _) = d2.vertices
    inv1 = {(x, y): _walk_inv(d1, x, y, True)
            for x, y in itertools.combinations(e1, 2)}
    matches = []
    for perm in itertools.permutations(e2):
        pi = dict(zip(e1, perm))
        for vmap in ({a1: a2, b1: b2}, {a1: b2, b1: a2}):
            keep = vmap[a1] == a2
            if all(_walk_inv(d2, pi[x], pi[y], keep) == inv1[(x, y)]
                   for x, y in inv1):
                matches.append((pi, vmap))
    if not matches:
        return "distinguished: invariant vectors differ"
    for pi, vmap in matches:
        if all(same_cyclic_order(tuple(pi[e] for e in vertex_cyclic_order(d1, v)),
                                 vertex_cyclic_order(d2, vmap[v]))
               for v in (a1, b1)):
            return "inconclusive"
    return "distinguished: not Legendrian isotopic"
