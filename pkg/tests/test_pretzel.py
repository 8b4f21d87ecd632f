import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from legtheta import (CrossingCapExceeded, LaurentPolynomial, apply_move, b1_ledger,
                      b1_quantity, enumerate_moves, invariant_vector, jones,
                      kauffman_bracket, linking_matrix, pretzel_coefficients,
                      pretzel_diagram, push_off, random_walk, realize_theta,
                      skein_bracket, verify_pretzel)
from legtheta.pretzel import _orient_by_trace
from legtheta.ribbon import Cap, Cross, Cup

from conftest import realizable_vectors

HOPF = [Cap(0), Cap(1), Cross(0), Cross(0), Cup(1), Cup(0)]
# the same link with an extra pair of crossings that cancel by a second move
HOPF_RII = [Cap(0), Cap(1), Cross(0), Cross(2, "falling"), Cross(2, "rising"),
            Cross(0), Cup(1), Cup(0)]
KINK = [Cap(0), Cross(0), Cup(0)]


def link(events):
    return _orient_by_trace(events, None)


@pytest.mark.parametrize("tbv, a", [
    ((-1, -1, -1), (-1, -1, -1)),
    ((-1, -5, -3), (-3, 1, -7)),
    ((-2, -2, -2), (-2, -2, -2)),
])
def test_coefficients(tbv, a):
    assert tuple(pretzel_coefficients(tbv)) == a


@given(st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)))
def test_coefficients_share_parity(tbv):
    a = pretzel_coefficients(tbv)
    assert len({x % 2 for x in a}) == 1
    assert a[0] + a[1] == 2 * tbv[0]


def test_pretzel_unlink():
    p = pretzel_diagram((0, 0, 0))
    assert len(p.components) == 3
    assert not np.any(linking_matrix(p))


def test_pretzel_components():
    assert len(pretzel_diagram((-1, -1, -1)).components) == 1
    assert len(pretzel_diagram((-3, 1, -7)).components) == 1
    p = pretzel_diagram((-2, -2, -2))
    assert len(p.components) == 3
    lk = linking_matrix(p)
    assert [lk[0, 1], lk[0, 2], lk[1, 2]] == [1, 1, 1]


def test_pretzel_mixed_parity_generic():
    p = pretzel_diagram((1, 2, 1))
    assert len(p.components) == 1


def test_trefoil_jones():
    want = LaurentPolynomial({2: 1, 6: 1, 8: -1})
    assert jones(pretzel_diagram((-1, -1, -1))) == want
    assert jones(pretzel_diagram((1, 1, 1))) == want.reflect()


def test_unknot_bracket():
    assert kauffman_bracket(link([Cap(0), Cup(0)])) == LaurentPolynomial({0: 1})
    assert kauffman_bracket(link([])) == LaurentPolynomial({0: 1})


def test_kink_multiplies_by_unit():
    assert kauffman_bracket(link(KINK)) == LaurentPolynomial({-3: -1})
    assert jones(link(KINK)) == LaurentPolynomial({0: 1})


def test_hopf_second_move_invariance():
    a, b = link(HOPF), link(HOPF_RII)
    assert len(b.crossings) == 4
    assert kauffman_bracket(a) == kauffman_bracket(b)
    assert jones(a) == jones(b)


def test_minimal_pushoff_matches_pretzel(parallel):
    assert jones(push_off(parallel)) == jones(pretzel_diagram((-1, -1, -1)))


def test_cap_raises():
    with pytest.raises(CrossingCapExceeded) as exc:
        kauffman_bracket(pretzel_diagram((-3, 1, -7)), cap=5)
    assert exc.value.n == 11 and exc.value.cap == 5


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("LEGTHETA_CROSSING_CAP", "2")
    with pytest.raises(CrossingCapExceeded):
        jones(pretzel_diagram((-1, -1, -1)))


@pytest.mark.parametrize("a", [(-1, -1, -1), (-2, -2, -2), (1, 2, 1), (-3, 1, -1), (0, 2, -2)])
def test_bracket_matches_skein_on_pretzels(a):
    p = pretzel_diagram(a)
    assert kauffman_bracket(p) == skein_bracket(p)


def test_bracket_matches_skein_on_pushoffs(parallel, antiparallel):
    for d in (parallel, antiparallel):
        po = push_off(d)
        assert kauffman_bracket(po) == skein_bracket(po)


def test_verify_minimal(parallel):
    rep = verify_pretzel(parallel)
    assert rep["passed"]
    assert rep["coefficients"] == [-1, -1, -1]
    assert rep["checks"] == {"components": "pass", "self_linking": "pass",
                             "linking": "not applicable", "jones": "pass"}


def test_verify_linking_example():
    rep = verify_pretzel(realize_theta((-2, -2, -2), (1, 1, -1)))
    assert rep["passed"]
    assert rep["checks"]["linking"] == "pass"
    for pair in rep["linking"]["pairs"].values():
        assert pair["pushoff"] == pair["pretzel"] == 1
        assert pair["half_twists"] == -2


def test_verify_example_skips_jones():
    rep = verify_pretzel(realize_theta((-1, -5, -3), (0, 0, 0)))
    assert rep["coefficients"] == [-3, 1, -7]
    assert rep["components"]["pushoff"] == 1
    assert rep["self_linking"]["observed"] == [1]
    assert rep["checks"]["jones"] == "skipped"
    assert "25 crossings" in rep["jones"]["reason"]
    assert rep["passed"]


def test_verify_example_with_larger_cap():
    rep = verify_pretzel(realize_theta((-1, -5, -3), (0, 0, 0)), cap=30)
    assert rep["checks"]["jones"] == "pass"


def test_b1_minimal(parallel):
    assert [b1_quantity(parallel, i) for i in (1, 2, 3)] == [0, 0, 0]
    for row in b1_ledger(parallel):
        assert row["cusps"] == 0
        assert row["ledger"] == row["a"] == -1


def test_b1_index_checked(parallel):
    with pytest.raises(ValueError):
        b1_quantity(parallel, 4)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(realizable_vectors(range(-4, 0)))))
def test_ledger_on_corpus(case):
    d = realize_theta(*case)
    a = pretzel_coefficients(invariant_vector(d).tb)
    assert [row["ledger"] for row in b1_ledger(d)] == list(a)


def test_b1_invariant_under_second_third_fourth_moves():
    kinds = set()
    d0 = realize_theta((-1, -5, -3), (0, 0, 0))
    for seed in range(20):
        d = random_walk(d0, 50, seed=seed).diagram
        b = [b1_quantity(d, i) for i in (1, 2, 3)]
        for s in enumerate_moves(d, insertions=False):
            if s.kind not in ("II", "III", "IV"):
                continue
            kinds.add(s.kind)
            d2 = apply_move(d, s)
            assert [b1_quantity(d2, i) for i in (1, 2, 3)] == b
            assert all(row["ledger"] == row["a"] for row in b1_ledger(d2))
    assert kinds == {"II", "III", "IV"}
