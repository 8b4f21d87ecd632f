"""
Invariants of a theta front, and fronts with given invariants
=============================================================

A theta-graph has two vertices a, b and three edges e1, e2, e3.  Its cycles
are C1 = e1 e2, C2 = e1 e3, C3 = e2 e3, each run out along the first edge
and back along the second.
"""

from legtheta import (classify_R, invariant_vector, parse, plan_theta,
                      realize_theta, render, serialize, standard_unknot,
                      theta_realizable)
from legtheta.invariants import knot_invariants

# The smallest front: three arcs from a to b, no cusps, no crossings.
minimal = parse("""mode theta
vertex a degree 3
vertex b degree 3
edge e1 a b
edge e2 a b
edge e3 a b
events:
V a 0 in=0 out=3 labels=e3,e2,e1
V b 0 in=3 out=0
""")
print(render(minimal, "ascii"))

# Each cycle turns back at both vertices, which counts as two cusps.
iv = invariant_vector(minimal)
print("tb =", iv.tb, " rot =", iv.rot, " R =", iv.R)
print("table-1 case and R:", classify_R(minimal))

# Unknots: every (tb, rot) with opposite parity and tb + |rot| <= -1.
for tb, rot in [(-1, 0), (-3, 2), (-4, -1)]:
    u = standard_unknot(tb, rot)
    print((tb, rot), "->", knot_invariants(u), f"{len(u.events)} events")

# Triples are realizable exactly when R = rot1 - rot2 + rot3 is 0 or -1.
for tbv, rotv in [((-1, -5, -3), (0, 0, 0)), ((-2, -2, -2), (1, 1, -1)),
                  ((-2, -2, -2), (1, 1, 1))]:
    print(tbv, rotv, theta_realizable(tbv, rotv))

# A realization, its construction plan, and its recomputed invariants.
d = realize_theta((-2, -2, -2), (1, 1, -1))
print(plan_theta((-2, -2, -2), (1, 1, -1)))
print(serialize(d))
print(invariant_vector(d))
print(render(d, "ascii"))
