import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from legtheta import (DiagramError, components, invariant_vector, linking_matrix,
                      pretzel_diagram, push_off, random_walk, realize_theta, self_linking,
                      standard_unknot, standardize, vertex_type)
from legtheta.ribbon import expected_self_linking
from legtheta.diagram import Crossing
from legtheta.ribbon import crossing_signs

from conftest import realizable_vectors, theta


def test_parallel_one_component(parallel):
    po = push_off(parallel)
    assert len(po.components) == 1
    assert components(po) == [(0, None)]
    assert self_linking(po, 0) == 1


def test_antiparallel_three_components(antiparallel):
    po = push_off(antiparallel)
    assert len(po.components) == 3
    names = sorted(n.lstrip("~") for _, n in components(po))
    assert names == ["C1", "C2", "C3"]


def test_vertex_type(parallel, antiparallel):
    assert vertex_type(parallel) == "parallel"
    assert vertex_type(antiparallel) == "antiparallel"


def test_vertex_type_without_standard_form(antiparallel):
    moved = random_walk(antiparallel, 25, seed=11).diagram
    assert vertex_type(moved) == "antiparallel"
    mirror = theta("V a 0 in=0 out=3 labels=e1,e2,e3\nV b 0 in=3 out=0\n")
    assert vertex_type(mirror) == "parallel"


def test_vertex_type_needs_theta():
    with pytest.raises(DiagramError):
        vertex_type(standard_unknot(-1, 0))


def test_vertex_type_survives_walk(parallel):
    moved = random_walk(parallel, 30, seed=3).diagram
    std, _ = standardize(moved)
    assert vertex_type(std) == "parallel"


@pytest.mark.parametrize("tb, rot", [(-1, 0), (-3, 0), (-3, 2), (-4, -1)])
def test_unknot_pushoffs(tb, rot):
    po = push_off(standard_unknot(tb, rot))
    assert len(po.components) == 2
    sl = {name: self_linking(po, i) for i, name in components(po)}
    assert sl == {"+k": tb - rot, "-k": tb + rot}


def test_zero_crossing_component():
    l = pretzel_diagram((0, 0, 0))
    assert [self_linking(l, c.index) for c in l.components] == [0, 0, 0]


def test_unknown_component(parallel):
    with pytest.raises(ValueError, match="unknown component"):
        self_linking(push_off(parallel), 5)


def test_split_link_unlinked():
    assert not np.any(linking_matrix(pretzel_diagram((0, 0, 0))))


def test_linking_example():
    po = push_off(realize_theta((-2, -2, -2), (1, 1, -1)))
    lk = linking_matrix(po)
    assert (lk == lk.T).all()
    # boundary orientation: the two strands of each band run antiparallel
    assert [lk[i, j] for i, j in ((0, 1), (0, 2), (1, 2))] == [1, 1, 1]


def test_self_linking_all_is_writhe(antiparallel):
    po = push_off(antiparallel)
    assert self_linking(po, "all") == sum(crossing_signs(po).values())


def test_crossing_origins_accounting():
    d = realize_theta((-1, -5, -3), (0, 0, 0))
    po = push_off(d)
    origins = po.origin_counts()
    graph_xings = sum(isinstance(e, Crossing) for e in d.events)
    assert origins[("inherited", 1)] == origins[("inherited", -1)] == 2 * graph_xings
    # each vertex disk is one net negative crossing
    assert origins[("vertex", -1)] == 2
    assert sum(origins.values()) == len(po.crossings)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(realizable_vectors(range(-3, 0)))))
def test_theorem_sl(case):
    d = realize_theta(*case)
    po = push_off(d)
    iv = invariant_vector(d)
    comps = components(po)
    assert len(comps) in (1, 3)
    if len(comps) == 1:
        assert vertex_type(d) == "parallel"
        assert self_linking(po, 0) == 1
    else:
        assert vertex_type(d) == "antiparallel"
        for i, name in comps:
            assert self_linking(po, i) == expected_self_linking(iv, name)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(list(realizable_vectors(range(-3, 0)))))
def test_interlinking_half_sums_integral(case):
    po = push_off(realize_theta(*case))
    signs = crossing_signs(po)
    owner = {}
    for comp in po.components:
        for x, _ in comp.crossings:
            owner.setdefault(x, set()).add(comp.index)
    between = [x for x, s in owner.items() if len(s) == 2]
    assert len(between) % 2 == 0
    assert sum(signs[x] for x in between) % 2 == 0


def test_attribution_survives_vertex_turns():
    # the walk leaves e1 with no graph event of its own, so its push-off
    # copies turn onto e2 and e3 through vertex b without a new segment
    d = random_walk(realize_theta((-1, -1, -2), (0, 0, -1)), 5, 1005).diagram
    po = push_off(d)
    iv = invariant_vector(d)
    names = [name for _, name in components(po)]
    assert sorted(n.lstrip("~") for n in names) == ["C1", "C2", "C3"]
    assert [self_linking(po, i) for i in range(3)] == \
        [expected_self_linking(iv, n) for n in names]
