"""
Transverse push-offs and pretzel links
======================================

The boundary of a ribbon around a planar theta front is a transverse link.
Its topology is fixed by the three tb numbers: it is the
(a1, a2, a3)-pretzel with a1 = tb1 + tb2 - tb3 and cyclic analogues.
"""

from legtheta import (components, invariant_vector, jones, linking_matrix,
                      pretzel_coefficients, pretzel_diagram, push_off,
                      realize_theta, render, self_linking, verify_pretzel,
                      vertex_type)

# When all a_i are odd the push-off is a knot with self-linking 1.
d = realize_theta((-1, -1, -1), (0, 0, 0))
po = push_off(d)
print(vertex_type(d), len(po.components), "component(s), sl =", self_linking(po, 0))
print("origins of the push-off crossings:", po.origin_counts())
print(render(po, "ascii"))

# Its Jones polynomial matches the (-1,-1,-1) pretzel, a trefoil.
print("push-off:", jones(po))
print("pretzel: ", jones(pretzel_diagram(pretzel_coefficients((-1, -1, -1)))))

# When all a_i are even there are three components, one per cycle.
d = realize_theta((-2, -2, -2), (1, 1, -1))
po = push_off(d)
iv = invariant_vector(d)
for i, name in components(po):
    print(f"T{i + 1} follows {name}: sl = {self_linking(po, i)}")
print(linking_matrix(po))

# The full certificate in one call.
rep = verify_pretzel(d)
print(rep["coefficients"], rep["checks"], "passed:", rep["passed"])

# Larger push-offs exceed the default crossing cap of 24; the Jones check
# is then skipped unless the cap is raised.
big = realize_theta((-1, -5, -3), (0, 0, 0))
print(verify_pretzel(big)["checks"])
print(verify_pretzel(big, cap=30)["checks"])
