import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrtopo.complexes import face_poset, full_simplex
from arrtopo.poset import (
    FinitePoset,
    NotASemilattice,
    barycentric_subdivision_poset,
    covering_pairs,
    is_semilattice,
    join,
    lower_set,
    minimal_elements,
)

from oracles import count_chains_brute


def chain(*xs):
    return FinitePoset.from_covers(xs, zip(xs, xs[1:]))


def antichain(*xs):
    return FinitePoset.from_covers(xs, [])


def test_order_axioms_checked():
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [[True, True], [True, True]])
    with pytest.raises(ValueError):
        FinitePoset(["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_minimal_elements(three_lines):
    assert minimal_elements(chain("a", "b", "c")) == ["a"]
    assert minimal_elements(antichain("a", "b", "c")) == ["a", "b", "c"]
    assert minimal_elements(three_lines.poset) == [0, 1, 2]


def test_lower_set(three_lines):
    c = chain("a", "b", "c")
    assert lower_set(c, "b", strict=True).elements == ("a",)
    assert lower_set(c, "b").elements == ("a", "b")
    assert len(lower_set(c, "a", strict=True)) == 0
    below_top = lower_set(three_lines.poset, 3, strict=True)
    assert below_top == antichain(0, 1, 2)
    with pytest.raises(KeyError):
        lower_set(c, "z")


def test_lower_set_is_induced(three_lines):
    p = three_lines.poset
    sub = lower_set(p, 3)
    for x in sub:
        for y in sub:
            assert sub.le(x, y) == p.le(x, y)


def test_join():
    assert join(chain("a", "b", "c"), {"a", "b"}) == "b"
    assert join(antichain("a", "b"), {"a", "b"}) is None


def test_join_three_lines(three_lines):
    assert join(three_lines.poset, {0, 1}) == 3
    for x in three_lines.poset:
        assert join(three_lines.poset, [x]) == x


def bowtie():
    return FinitePoset.from_covers("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def test_bowtie_is_not_a_semilattice():
    assert not is_semilattice(bowtie())
    with pytest.raises(NotASemilattice):
        join(bowtie(), {"a", "b"})


def test_semilattice_examples(three_lines):
    boolean = FinitePoset.from_relation(
        [frozenset(s) for s in ([], [1], [2], [1, 2])], lambda a, b: a <= b
    )
    assert is_semilattice(boolean)
    assert is_semilattice(three_lines.poset)


def test_barycentric_subdivision_poset():
    single = barycentric_subdivision_poset(antichain("a"))
    assert single.elements == (frozenset("a"),)
    two = barycentric_subdivision_poset(chain("a", "b"))
    assert len(two) == 3
    assert covering_pairs(two) == [
        (frozenset("a"), frozenset("ab")),
        (frozenset("b"), frozenset("ab")),
    ]
    three = barycentric_subdivision_poset(antichain("a", "b", "c"))
    assert covering_pairs(three) == [] and len(three) == 3


def test_covering_pairs():
    assert covering_pairs(chain("a", "b", "c")) == [("a", "b"), ("b", "c")]
    assert covering_pairs(antichain("a", "b")) == []
    # face poset of one triangle: 3 edges x 2 vertices + 3 edges under the 2-face
    assert len(covering_pairs(face_poset(full_simplex(2)))) == 9


@st.composite
def random_posets(draw):
    n = draw(st.integers(1, 6))
    # random DAG on 0..n-1 respecting index order, then transitive closure
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return FinitePoset.from_covers(range(n), edges)


@settings(max_examples=80, deadline=None)
@given(random_posets())
def test_bd_size_is_chain_count(p):
    bd = barycentric_subdivision_poset(p)
    assert len(bd) == count_chains_brute(list(p.elements), p.le)
    bd._check_order()


@settings(max_examples=80, deadline=None)
@given(random_posets())
def test_covers_have_nothing_between(p):
    for a, b in covering_pairs(p):
        assert p.lt(a, b)
        assert not any(p.lt(a, z) and p.lt(z, b) for z in p)
    n_strict = int(p.leq.sum()) - len(p)
    assert len(covering_pairs(p)) <= n_strict
