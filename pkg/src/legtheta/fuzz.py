"""Seeded move fuzzing: random walks with invariants checked after every move.

Walk ``w`` of a run with base seed ``s`` uses seed ``s + w``, so any failure
is replayed by ``random_walk(d, step + 1, s + w)``.
"""
from __future__ import annotations

from collections import Counter

from .diagram import (DiagramError, FrontDiagram, same_cyclic_order, validate,
                      vertex_cyclic_order)
from .invariants import classify_R, invariant_vector, knot_invariants
from .moves import random_walk, standardize
from .ribbon import components, expected_self_linking, push_off, self_linking

__all__ = ["fuzz", "CHECKS"]

CHECKS = ("validity", "invariant_vector", "cyclic_order", "components",
          "self_linking", "table1")


class _Failure(Exception):
    def __init__(self, check, detail):
        super().__init__(detail)
        self.check = check
        self.detail = detail


def _signature(d: FrontDiagram):
    if d.mode == "theta":
        inv = invariant_vector(d)
    elif d.mode == "knot":
        inv = knot_invariants(d, d.edges[0].name)
    else:
        inv = None
    orders = {v: vertex_cyclic_order(d, v) for v, _ in d.vertices}
    return inv, orders


def _checker(d0: FrontDiagram, counts: Counter):
    inv0, orders0 = _signature(d0)
    ncomp0 = len(push_off(d0).components)

    def check(d, trace):
        try:
            validate(d)
        except DiagramError as exc:
            raise _Failure("validity", str(exc))
        counts["validity"] += 1
        inv, orders = _signature(d)
        if inv != inv0:
            raise _Failure("invariant_vector", f"{inv} != {inv0}")
        counts["invariant_vector"] += 1
        for v, o in orders.items():
            if not same_cyclic_order(o, orders0[v]):
                raise _Failure("cyclic_order", f"vertex {v}: {o} vs {orders0[v]}")
        counts["cyclic_order"] += 1
        po = push_off(d)
        if len(po.components) != ncomp0:
            raise _Failure("components", f"{len(po.components)} != {ncomp0}")
        counts["components"] += 1
        if d.mode == "theta":
            if len(po.components) == 1:
                want = [1]
            else:
                want = [expected_self_linking(inv, name) for _, name in components(po)]
            got = [self_linking(po, c.index) for c in po.components]
            if got != want:
                raise _Failure("self_linking", f"{got} != {want}")
            counts["self_linking"] += 1
    return check


def fuzz(d: FrontDiagram, walks: int, steps: int, seed: int) -> dict:
    """Run ``walks`` seeded walks of ``steps`` moves from ``d``.

    After every move the diagram is validated and its invariant vector,
    vertex cyclic orders, push-off component count and push-off
    self-linking numbers are compared with the start.  For a theta graph
    each final diagram is also standardized and classified by Table 1.
    A failing walk stops at its first failure and reports the move trace
    up to that point, which is the shortest prefix reproducing it.
    """
    validate(d)
    counts: Counter = Counter()
    rows: Counter = Counter()
    failures = []
    early = 0
    for w in range(walks):
        s = seed + w
        check = _checker(d, counts)
        trace: list = []

        def record(dd, tr):
            trace[:] = tr
            check(dd, tr)

        try:
            res = random_walk(d, steps, s, check=record)
            early += res.stopped_early
            if d.mode == "theta":
                try:
                    std, _ = standardize(res.diagram)
                    case, R = classify_R(std)
                except (AssertionError, DiagramError) as exc:
                    raise _Failure("table1", str(exc))
                if R not in (0, -1) or case in (3, 6):
                    raise _Failure("table1", f"case {case}, R = {R}")
                rows[case] += 1
                counts["table1"] += 1
        except _Failure as f:
            failures.append({"walk": w, "seed": s, "step": len(trace), "check": f.check,
                             "detail": f.detail,
                             "trace": [t.describe() for t in trace]})
    table = {c: {"passed": counts[c],
                 "failed": sum(1 for f in failures if f["check"] == c)}
             for c in CHECKS if counts[c] or any(f["check"] == c for f in failures)}
    return {"walks": walks, "steps": steps, "seed": seed,
            "stopped_early": early, "checks": table,
            "table1_rows": {str(k): v for k, v in sorted(rows.items())},
            "failures": failures, "passed": not failures}
