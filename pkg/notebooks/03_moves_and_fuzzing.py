"""
Legendrian moves and seeded random walks
========================================

Moves rewrite a short run of events.  Each one is invertible, and none
changes the invariants, the cyclic edge order at a vertex, or the push-off.
"""

from collections import Counter

from legtheta import (apply_move, classify_R, enumerate_moves, fuzz, invariant_vector,
                      invert_site, random_walk, realize_theta, render, stabilize,
                      standardize)

d = realize_theta((-2, -2, -2), (1, 1, -1))

# Every applicable move, grouped by kind.
sites = enumerate_moves(d)
print(Counter(s.kind for s in sites))
for s in sites:
    if s.kind not in ("I+", "I-"):
        print(" ", s.describe())

# Apply a move, then its inverse.
s = next(s for s in sites if s.kind == "II")
moved = apply_move(d, s)
assert apply_move(moved, invert_site(s)) == d

# A seeded walk.  The trace replays the walk exactly.
walk = random_walk(d, 25, seed=4)
print(render(walk.diagram, "ascii"))
print([t.describe().split(":")[0] for t in walk.trace])
print(invariant_vector(walk.diagram) == invariant_vector(d))

# Bringing both vertices back to standard form uses rotations only.
std, trace = standardize(walk.diagram)
print(len(trace), "rotations; table-1 case and R:", classify_R(std))

# Stabilization is not a move: it lowers tb on the two cycles through the edge.
print(invariant_vector(stabilize(d, "e1", +1)))

# The fuzz driver checks everything after every move.
rep = fuzz(d, walks=5, steps=30, seed=0)
for name, c in rep["checks"].items():
    print(f"{name:<18}{c['passed']:>6}{c['failed']:>4}")
print("table-1 rows:", rep["table1_rows"])
