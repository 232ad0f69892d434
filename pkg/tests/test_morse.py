import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrtopo.arrangement import intersection_semilattice, vassiliev_skeleton, zz_skeleton
from arrtopo.complexes import NotAComplex, SimplicialComplex, euler_characteristic, full_simplex, sphere_complex
from arrtopo.exactlin import canonicalize
from arrtopo.generate import random_arrangement
from arrtopo.homology import reduced_homology
from arrtopo.morse import (
    Matching,
    StuckCollapse,
    backward_by_rule,
    build_matching,
    collapse_sequence,
    collapse_states,
    completion,
    critical_matches_order_complex,
    critical_subcomplex,
    is_complete,
    pivot,
    trace_lines,
    verify_acyclic,
    verify_identity_condition,
    verify_iota_monotone,
)

A1, A2, A3 = frozenset({0}), frozenset({1}), frozenset({2})
A12, A123 = frozenset({0, 1}), frozenset({0, 1, 2})


def test_is_complete(three_lines):
    assert is_complete(three_lines, {0})
    assert not is_complete(three_lines, {0, 1})
    assert is_complete(three_lines, {0, 1, 2})


def test_no_join_is_incomplete(parallel_lines):
    assert not is_complete(parallel_lines, {0, 1})


def test_completion(three_lines, axes):
    assert completion(three_lines, {0, 1}) == A123
    assert completion(three_lines, {2}) == A3
    assert completion(axes, {0, 1}) == A12


def test_pivot(three_lines):
    assert pivot(three_lines, (A1, A123)) == (None, None)
    assert pivot(three_lines, (A12,)) == (A12, 1)
    assert pivot(three_lines, (A1, A12, A123)) == (A12, 2)


def test_build_matching_three_lines(three_lines):
    k = vassiliev_skeleton(three_lines)
    w = build_matching(three_lines, k)
    assert len(w) == 9 and len(w.critical) == 7
    assert w.partner(frozenset({A12})) == frozenset({A12, A123})
    assert len(w.forward) + len(w.backward) + len(w.critical) == 25
    assert w.backward == backward_by_rule(three_lines, k)


def test_build_matching_axes(axes):
    k = vassiliev_skeleton(axes)
    w = build_matching(axes, k)
    assert len(w) == 0 and len(w.critical) == 5 == len(k)


def test_matching_rejects_overlaps():
    a, b, ab = frozenset("a"), frozenset("b"), frozenset("ab")
    with pytest.raises(ValueError):
        Matching(((a, ab), (b, ab)))
    with pytest.raises(ValueError):
        Matching(((a, frozenset("abc")),))


def test_verify_acyclic_examples(three_lines):
    k = full_simplex(2)
    assert verify_acyclic(k, Matching.on(k, []))
    v = vassiliev_skeleton(three_lines)
    assert verify_acyclic(v, build_matching(three_lines, v))


def test_adversarial_cycle_on_triangle_boundary():
    k = sphere_complex(1)
    w = Matching.on(k, [({0}, {0, 1}), ({1}, {1, 2}), ({2}, {0, 2})])
    assert not verify_acyclic(k, w)
    assert verify_acyclic(k, Matching.on(k, [({0}, {0, 1}), ({1}, {1, 2})]))


def test_iota_certificate(three_lines):
    v = vassiliev_skeleton(three_lines)
    assert verify_iota_monotone(three_lines, build_matching(three_lines, v))
    assert verify_iota_monotone(three_lines, Matching(()))


def test_critical_subcomplex(three_lines, parallel_lines):
    v = vassiliev_skeleton(three_lines)
    w = build_matching(three_lines, v)
    crit = critical_subcomplex(v, w, three_lines)
    assert crit.f_vector() == (4, 3)
    assert critical_matches_order_complex(three_lines, crit)
    k = full_simplex(2)
    assert critical_subcomplex(k, Matching.on(k, [])) == k
    pv = vassiliev_skeleton(parallel_lines)
    assert critical_subcomplex(pv, build_matching(parallel_lines, pv)).f_vector() == (2,)


def test_critical_subcomplex_must_be_a_complex():
    tri = full_simplex(2)
    # removing {0} leaves the edge {0,2} without a vertex
    with pytest.raises(NotAComplex):
        critical_subcomplex(tri, Matching.on(tri, [({0}, {0, 1})]))
    k = full_simplex(1)
    assert critical_subcomplex(k, Matching.on(k, [({0}, {0, 1})])).f_vector() == (1,)


def test_collapse_three_lines(three_lines):
    v = vassiliev_skeleton(three_lines)
    w = build_matching(three_lines, v)
    steps = collapse_sequence(v, w)
    assert len(steps) == 9
    states = list(collapse_states(v, steps))
    assert [len(s) for s in states] == list(range(23, 6, -2))
    h0 = reduced_homology(v)
    for s in states:
        assert euler_characteristic(s) == 1 and reduced_homology(s) == h0
    assert states[-1] == critical_subcomplex(v, w)
    assert trace_lines(steps) == trace_lines(collapse_sequence(v, build_matching(three_lines, v)))
    assert trace_lines(steps)[0].startswith("step 1: remove σ=(")


def test_collapse_empty_matching():
    k = full_simplex(2)
    assert collapse_sequence(k, Matching.on(k, [])) == []


def test_stuck_collapse_on_cyclic_matching():
    k = sphere_complex(1)
    w = Matching.on(k, [({0}, {0, 1}), ({1}, {1, 2}), ({2}, {0, 2})])
    with pytest.raises(StuckCollapse):
        collapse_sequence(k, w)


def test_identity_condition(three_lines):
    v = vassiliev_skeleton(three_lines)
    w = build_matching(three_lines, v)
    report = verify_identity_condition(three_lines, w)
    assert report.passed and report.n_passed == 9 and len(report) == 9
    entry = next(e for e in report.entries if e.sigma == frozenset({A12}))
    assert entry.checked and entry.passed


def test_identity_condition_four_planes():
    planes = [canonicalize([row], [0], 3) for row in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1])]
    from arrtopo.arrangement import validate

    lat = intersection_semilattice(validate(planes, 3))
    w = build_matching(lat)
    report = verify_identity_condition(lat, w)
    assert report.passed
    assert 0 < report.n_checked <= len(report) == len(w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_matching_properties_on_random_arrangements(seed):
    lat = intersection_semilattice(random_arrangement(random.Random(seed)))
    v = vassiliev_skeleton(lat)
    w = build_matching(lat, v)
    assert len(w.forward) + len(w.backward) + len(w.critical) == len(v)
    assert verify_acyclic(v, w) and verify_iota_monotone(lat, w)
    assert verify_identity_condition(lat, w).passed
    crit = critical_subcomplex(v, w, lat)
    steps = collapse_sequence(v, w)
    assert len(v) - 2 * len(steps) == len(crit)
    assert reduced_homology(v) == reduced_homology(zz_skeleton(lat))
