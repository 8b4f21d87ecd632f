import pytest
from hypothesis import given, settings, strategies as st

from legtheta import (DiagramError, StaleSiteError, apply_move, classify_R,
                      enumerate_moves, invariant_vector, invert_site, is_standard_form,
                      push_off, random_walk, realize_theta, standardize, validate,
                      vertex_cyclic_order)
from legtheta.diagram import same_cyclic_order
from legtheta.moves import KINDS

from conftest import theta


def _walked(seeds, n=8, steps=40):
    for d in seeds:
        for seed in range(n):
            yield random_walk(d, steps, seed=seed).diagram


def test_minimal_has_sites_at_both_vertices(parallel):
    sites = enumerate_moves(parallel, insertions=False)
    vi = [s for s in sites if s.kind == "VI"]
    assert vi
    touched = {ev.name for s in vi for ev in s.before if hasattr(ev, "name")}
    assert touched == {"a", "b"}


def test_no_crossing_moves_on_narrow_word(parallel):
    # at most one strand between the vertices: no II or III sites
    d = theta("V a 0 in=0 out=3 labels=e3,e2,e1\nV b 0 in=3 out=0\n")
    assert not [s for s in enumerate_moves(d) if s.kind in ("II", "III")]


THIRD = "V a 0 in=0 out=3 labels=e3,e2,e1\nX 0\nX 1\nX 0\nV b 0 in=3 out=0\n"


def _roundtrip(d, insertions):
    kinds = set()
    for s in enumerate_moves(d, insertions=insertions):
        d2 = apply_move(d, s)
        validate(d2)
        assert apply_move(d2, invert_site(s)) == d
        inv = invert_site(s)
        assert inv in enumerate_moves(d2, insertions=insertions or inv.variant == "ins")
        kinds.add(s.kind)
    return kinds


def test_every_site_applies_and_inverts(seeds):
    kinds = _roundtrip(theta(THIRD), False)
    for d in _walked(seeds, n=4, steps=30):
        kinds |= _roundtrip(d, False)
    assert kinds == set(KINDS)


def test_kink_sites_apply_and_invert(parallel, antiparallel):
    for d in (parallel, antiparallel, random_walk(parallel, 10, seed=2).diagram):
        assert _roundtrip(d, True) >= {"I+", "I-"}


def test_invert_site_is_involution(parallel):
    for s in enumerate_moves(parallel):
        assert invert_site(invert_site(s)) == s


def test_stale_site(parallel):
    s = next(s for s in enumerate_moves(parallel) if s.kind == "VI")
    moved = apply_move(parallel, s)
    with pytest.raises(StaleSiteError):
        apply_move(moved, s)


def test_moves_preserve_identity_and_invariants(seeds):
    for d in _walked(seeds, n=3, steps=25):
        iv = invariant_vector(d)
        orders = {v: vertex_cyclic_order(d, v) for v in ("a", "b")}
        ncomp = len(push_off(d).components)
        for s in enumerate_moves(d, insertions=False):
            d2 = apply_move(d, s)
            assert d2.vertices == d.vertices and d2.edges == d.edges
            assert invariant_vector(d2) == iv
            for v in ("a", "b"):
                assert same_cyclic_order(vertex_cyclic_order(d2, v), orders[v])
            assert len(push_off(d2).components) == ncomp


def test_walk_zero_steps(parallel):
    res = random_walk(parallel, 0, seed=5)
    assert res.diagram == parallel
    assert list(res.trace) == []
    assert not res.stopped_early


def test_walk_deterministic(parallel):
    a = random_walk(parallel, 40, seed=123)
    b = random_walk(parallel, 40, seed=123)
    assert a.diagram == b.diagram
    assert [t.describe() for t in a.trace] == [t.describe() for t in b.trace]
    assert random_walk(parallel, 40, seed=124).diagram != a.diagram


def test_walk_replays_from_trace(parallel):
    res = random_walk(parallel, 30, seed=9)
    d = parallel
    for s in res.trace:
        d = apply_move(d, s)
    assert d == res.diagram


def test_walk_check_called_each_step(parallel):
    seen = []
    random_walk(parallel, 12, seed=1, check=lambda d, tr: seen.append(len(tr)))
    assert seen == list(range(1, 13))


def test_standardize_after_walks(seeds):
    for d0 in seeds:
        case0 = classify_R(d0) if is_standard_form(d0) else None
        for seed in range(3):
            d = random_walk(d0, 30, seed=seed).diagram
            std, trace = standardize(d)
            assert is_standard_form(std)
            assert all(s.kind == "VI" for s in trace)
            assert invariant_vector(std) == invariant_vector(d0)
            case, R = classify_R(std)
            assert R in (0, -1) and case not in (3, 6)
            if case0:
                assert R == case0[1]


def test_standardize_rejects_reversed_order():
    d = theta("V a 0 in=0 out=3 labels=e1,e2,e3\nV b 0 in=3 out=0\n")
    with pytest.raises(DiagramError):
        standardize(d)


def test_fourth_move_site_found():
    d0 = realize_theta((-1, -5, -3), (0, 0, 0))
    found = any(s.kind == "IV"
                for seed in range(10)
                for s in enumerate_moves(random_walk(d0, 50, seed=seed).diagram))
    assert found


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 40))
def test_walk_invariance_property(seed, steps):
    d0 = realize_theta((-2, -2, -2), (1, 1, -1))
    res = random_walk(d0, steps, seed=seed)
    validate(res.diagram)
    assert invariant_vector(res.diagram) == invariant_vector(d0)
    assert len(res.trace) == steps
