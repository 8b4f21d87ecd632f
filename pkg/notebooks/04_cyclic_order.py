"""
Equal invariants, different graphs
==================================

Turning a front upside down, (x, y, z) -> (x, -y, -z), keeps tb and negates
rot.  With rot = 0 throughout the invariant vectors agree, but the cyclic
order of the edges at each vertex is reversed.  No Legendrian isotopy can
reverse it, so the two graphs are not isotopic.
"""

from legtheta import (counterexample_pair, distinguish_by_cyclic_order,
                      invariant_vector, random_walk, render, vertex_cyclic_order)

g, g2 = counterexample_pair((-1, -5, -3), (0, 0, 0))
for name, d in (("G", g), ("G'", g2)):
    iv = invariant_vector(d)
    print(name, iv.tb, iv.rot, "order at a:", vertex_cyclic_order(d, "a"))
    print(render(d, "ascii"))

print(distinguish_by_cyclic_order(g, g2))

# Moves never change the cyclic order, so a moved copy is not told apart.
print(distinguish_by_cyclic_order(g, random_walk(g, 20, seed=1).diagram))

# SVG output for figures.
with open("cyclic_order_G.svg", "w") as fh:
    fh.write(render(g))
