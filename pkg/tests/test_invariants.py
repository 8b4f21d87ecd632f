import pytest
from hypothesis import given, settings, strategies as st

from legtheta import (DiagramError, classify_R, invariant_vector, is_standard_form,
                      knot_invariants, parse, realize_theta, rot, stabilize,
                      standard_unknot, tb, trace_cycle)
from legtheta.diagram import trace_knot

from conftest import PARALLEL, realizable_vectors, theta


def test_minimal_theta_vector(parallel):
    iv = invariant_vector(parallel)
    assert iv.tb == (-1, -1, -1)
    assert iv.rot == (0, 0, 0)
    assert iv.R == 0


@pytest.mark.parametrize("c", ["C1", "C2", "C3"])
def test_minimal_cycles(parallel, c):
    t = trace_cycle(parallel, c)
    assert tb(t) == -1
    assert rot(t) == 0


def test_unknot_tb_rot():
    assert knot_invariants(standard_unknot(-3, 0)) == (-3, 0)
    assert knot_invariants(standard_unknot(-3, 2)) == (-3, 2)
    assert tb(trace_knot(standard_unknot(-3, 0))) == -3
    assert rot(trace_knot(standard_unknot(-3, 2))) == 2


def test_reversal_negates_rot():
    fwd = standard_unknot(-5, 2)
    back = parse(fwd.__str__().replace("edge k loop", "edge k loop reversed"))
    assert knot_invariants(back) == (-5, -2)


@pytest.mark.parametrize("tbv, rotv", [
    ((-1, -5, -3), (0, 0, 0)),
    ((-2, -2, -2), (1, 1, -1)),
    ((-1, -1, -2), (0, 0, -1)),
])
def test_realized_vectors(tbv, rotv):
    iv = invariant_vector(realize_theta(tbv, rotv))
    assert (iv.tb, iv.rot) == (tbv, rotv)


def test_r_minus_one_example():
    assert invariant_vector(realize_theta((-2, -2, -2), (1, 1, -1))).R == -1


def test_classify_minimal_parallel(parallel):
    assert classify_R(parallel) == (1, 0)


def test_classify_c3_up(antiparallel):
    corners = [k for k in trace_cycle(antiparallel, "C3").corners() if k.vertex == "b"]
    assert corners[0].direction == "up"
    assert classify_R(antiparallel) == (2, -1)


def test_classify_needs_standard_form():
    d = theta("V a 0 in=0 out=3 labels=e1,e2,e3\nV b 0 in=3 out=0\n")
    assert not is_standard_form(d)
    with pytest.raises(DiagramError, match="non-standard"):
        classify_R(d)


def test_classify_never_rows_3_or_6():
    seen = set()
    for tbv, rotv in realizable_vectors(range(-3, 0)):
        d = realize_theta(tbv, rotv)
        if is_standard_form(d):
            case, R = classify_R(d)
            seen.add(case)
            assert R in (0, -1)
    assert not seen & {3, 6}


def test_half_counts_integral():
    for tbv, rotv in realizable_vectors(range(-3, 0)):
        d = realize_theta(tbv, rotv)
        for c in ("C1", "C2", "C3"):
            t = trace_cycle(d, c)
            turning = [k for k in t.corners() if k.direction]
            assert (len(t.cusps()) + len(turning)) % 2 == 0


# edge -> (cycles containing it, orientation of the edge in each)
_ON = {"e1": {0: 1, 1: 1}, "e2": {0: -1, 2: 1}, "e3": {1: -1, 2: -1}}


@settings(max_examples=60, deadline=None)
@given(case=st.sampled_from(list(realizable_vectors(range(-3, 0)))),
       edge=st.sampled_from(["e1", "e2", "e3"]), sign=st.sampled_from([1, -1]))
def test_stabilize_contract(case, edge, sign):
    d = realize_theta(*case)
    before = invariant_vector(d)
    after = invariant_vector(stabilize(d, edge, sign))
    for i in range(3):
        if i in _ON[edge]:
            assert after.tb[i] == before.tb[i] - 1
            assert after.rot[i] == before.rot[i] + sign * _ON[edge][i]
        else:
            assert after.tb[i] == before.tb[i]
            assert after.rot[i] == before.rot[i]


def test_stabilize_rejects_bad_sign(parallel):
    with pytest.raises(ValueError):
        stabilize(parallel, "e1", 0)
    with pytest.raises(DiagramError):
        stabilize(parallel, "e9", 1)


def test_parse_of_minimal_is_standard():
    assert is_standard_form(parse(PARALLEL))
