"""Legendrian theta graphs in standard contact 3-space.

Fronts are encoded as left-to-right event words (cusps, crossings and
vertices).  The package computes Thurston-Bennequin and rotation numbers
of the three cycles, realizes admissible invariant vectors, builds the
transverse push-off of the Legendrian ribbon, compares it with pretzel
links, and fuzzes everything with seeded Legendrian isotopy moves.
"""
from .diagram import (CYCLES, Crossing, DiagramError, Edge, FrontDiagram,
                      LeftCusp, ParseError, RightCusp, Vertex, parse,
                      serialize, trace_cycle, trace_knot, validate,
                      vertex_cyclic_order)
from .invariants import (TABLE1, InvariantVector, classify_R,
                         invariant_vector, is_standard_form, knot_invariants,
                         rot, tb)
from .laurent import LaurentPolynomial
from .moves import (MoveSite, StaleSiteError, WalkResult, apply_move,
                    enumerate_moves, invert_site, random_walk, stabilize,
                    standardize)
from .pretzel import (CrossingCapExceeded, b1_ledger, b1_quantity,
                      crossing_counts, jones, kauffman_bracket,
                      pretzel_coefficients, pretzel_diagram, skein_bracket,
                      verify_pretzel)
from .realization import (ClosedLoopError, NotRealizable, acceptable,
                          counterexample_pair,
                          distinguish_by_cyclic_order, plan_theta,
                          realize_theta, standard_unknot, theta_realizable)
from .fuzz import fuzz
from .render import render
from .ribbon import (LinkDiagram, components, linking_matrix, push_off,
                     self_linking, vertex_type)

__version__ = "0.1.0"
