"""Permutation arithmetic and group enumeration."""

from __future__ import annotations

import pytest
from conftest import naive_conjugacy_classes, naive_mulclose, naive_subgroup_closure

from autocyc import catalog
from autocyc.errors import DegreeMismatch, FileFormatError, OrderBoundExceeded
from autocyc.perm import (
    Permutation,
    compose,
    enumerate_group,
    group_from_json,
    group_hash,
    group_to_json,
    identity,
    inverse,
    parse_cycles,
)

A5_GENS = [Permutation((1, 2, 3, 4, 0)), Permutation((1, 2, 0, 3, 4))]


def test_permutation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 3))


def test_compose_identity_and_involution():
    p = Permutation((1, 0))
    assert compose(identity(2), p) == p
    assert compose(p, identity(2)) == p
    assert compose(p, p) == identity(2)


def test_compose_three_cycle_squared():
    c = Permutation((1, 2, 0))  # (0 1 2)
    assert compose(c, c) == Permutation((2, 0, 1))  # (0 2 1)


def test_compose_applies_left_first():
    p = Permutation((1, 0, 2))
    q = Permutation((0, 2, 1))
    assert compose(p, q).images == tuple(q.images[v] for v in p.images)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(2), identity(3))


def test_inverse():
    assert inverse(identity(4)) == identity(4)
    assert inverse(Permutation((1, 2, 0))) == Permutation((2, 0, 1))
    p = Permutation((3, 1, 4, 0, 2))
    assert compose(p, inverse(p)) == identity(5)
    assert compose(inverse(p), p) == identity(5)


def test_enumerate_cyclic_5():
    g = enumerate_group([Permutation((1, 2, 3, 4, 0))], 5)
    assert g.order == 5
    assert g.elements[0] == identity(5)


def test_enumerate_a5_matches_naive_closure():
    expected = naive_mulclose([p.images for p in A5_GENS])
    g = enumerate_group(A5_GENS, 5, name="a5")
    assert g.order == len(expected) == 60
    assert {p.images for p in g.elements} == expected


def test_enumerate_klein_four():
    gens = [Permutation((1, 0, 2, 3)), Permutation((0, 1, 3, 2))]
    g = enumerate_group(gens, 4)
    assert g.order == 4


def test_enumerate_deterministic_and_dedup():
    g1 = enumerate_group(A5_GENS, 5)
    g2 = enumerate_group(A5_GENS + [A5_GENS[0]], 5)
    assert g1.elements == g2.elements
    assert len(g2.generators) == 2


def test_enumerate_order_bound():
    with pytest.raises(OrderBoundExceeded):
        enumerate_group(A5_GENS, 5, bound=59)


def test_element_order(entry):
    z5 = enumerate_group([Permutation((1, 2, 3, 4, 0))], 5)
    assert z5.element_order(0) == 1
    assert z5.element_order(1) == 5
    g27 = entry("g27")
    assert g27.group.element_order(g27.tagged["a"]) == 9
    assert g27.group.element_order(g27.tagged["b"]) == 3


def test_generated_closure(entry):
    g27 = entry("g27").group
    assert g27.generated_closure([0]) == frozenset({0})
    a = entry("g27").tagged["a"]
    assert len(g27.generated_closure([a])) == g27.element_order(a)
    both = [entry("g27").tagged["a"], entry("g27").tagged["b"]]
    assert len(g27.generated_closure(both)) == 27
    assert g27.generated_closure(both) == naive_subgroup_closure(g27, both)


def test_is_cyclic_pair_basics(entry):
    g27 = entry("g27")
    G = g27.group
    a, b = g27.tagged["a"], g27.tagged["b"]
    a2 = G.mul(a, a)
    assert G.is_cyclic_pair(a, a2)
    assert not G.is_cyclic_pair(a, b)
    k4 = entry("klein4").group
    invols = [i for i in range(1, 4)]
    assert not k4.is_cyclic_pair(invols[0], invols[1])


def test_is_cyclic_pair_symmetry_and_commuting(entry):
    G = entry("q8").group
    for i in range(G.order):
        for j in range(G.order):
            assert G.is_cyclic_pair(i, j) == G.is_cyclic_pair(j, i)
            if G.is_cyclic_pair(i, j):
                assert G.commutes(i, j)
        if i:
            assert G.is_cyclic_pair(i, i)


def test_center(entry):
    z6 = entry("z6").group
    assert z6.center() == frozenset(range(6))
    g27 = entry("g27")
    G = g27.group
    a3 = g27.tagged["a3"]
    assert G.center() == frozenset({0, a3, G.mul(a3, a3)})
    z6f = entry("z6xfrob42").group
    assert len(z6f.center()) == 6


def test_centralizer(entry):
    G = entry("a5").group
    assert G.centralizer(0) == frozenset(range(60))
    invol = next(i for i in range(1, 60) if G.element_order(i) == 2)
    assert len(G.centralizer(invol)) == 4
    z6 = entry("z6").group
    assert z6.centralizer(1) == frozenset(range(6))


def test_conjugacy_classes_a5(entry):
    G = entry("a5").group
    classes = G.conjugacy_classes()
    assert sorted(len(c) for c in classes) == [1, 12, 12, 15, 20]
    assert set(map(frozenset, classes)) == set(naive_conjugacy_classes(G))


def test_conjugacy_classes_abelian_and_g27(entry):
    z6 = entry("z6").group
    assert all(len(c) == 1 for c in z6.conjugacy_classes())
    assert len(entry("g27").group.conjugacy_classes()) == 11


def test_lagrange_and_class_equation(entry):
    for key in ("z6", "q8", "g27", "s3", "a5"):
        G = entry(key).group
        n = G.order
        assert n % len(G.center()) == 0
        classes = G.conjugacy_classes()
        assert sum(len(c) for c in classes) == n
        for c in classes:
            assert n % len(c) == 0
        for i in range(n):
            assert n % len(G.centralizer(i)) == 0
            assert n % len(G.cyclic_subgroup(i)) == 0


def test_cache_transparency():
    gens = [Permutation((1, 2, 3, 4, 0)), Permutation((1, 2, 0, 3, 4))]
    cached = enumerate_group(gens, 5, cache_tables=True)
    plain = enumerate_group(gens, 5, cache_tables=False)
    for i in range(0, 60, 7):
        for j in range(0, 60, 11):
            assert cached.mul(i, j) == plain.mul(i, j)
        assert cached.inv(i) == plain.inv(i)
        assert cached.element_order(i) == plain.element_order(i)


def test_generators_appear_in_elements():
    g = enumerate_group(A5_GENS, 5)
    for gen in g.generators:
        assert gen in g.index_of


def test_parse_cycles():
    assert parse_cycles("(1 2 3)(4 5)", 5) == Permutation((1, 2, 0, 4, 3))
    assert parse_cycles("()", 3) == identity(3)
    assert parse_cycles("(1,2)", 2) == Permutation((1, 0))
    with pytest.raises(FileFormatError):
        parse_cycles("(1 2", 3)
    with pytest.raises(FileFormatError):
        parse_cycles("(1 2)(2 3)", 3)
    with pytest.raises(FileFormatError):
        parse_cycles("(1 9)", 3)


def test_group_json_round_trip():
    g = enumerate_group(A5_GENS, 5, name="a5")
    again = group_from_json(group_to_json(g))
    assert again.elements == g.elements
    assert group_hash(again) == group_hash(g)


def test_group_json_cycle_notation():
    obj = {"name": "s3", "degree": 3, "generators": ["(1 2 3)", "(1 2)"]}
    g = group_from_json(obj)
    assert g.order == 6


def test_group_json_errors():
    with pytest.raises(FileFormatError):
        group_from_json({"name": "x", "degree": 3, "generators": [[0, 1]]})
    with pytest.raises(FileFormatError):
        group_from_json({"degree": 3, "generators": []})


def test_word_names(entry):
    g27 = entry("g27")
    G = g27.group
    assert G.word_name(0) == "1"
    assert G.word_name(g27.tagged["a"]) == "a"
    assert G.word_name(g27.tagged["a3"]) == "a^3"
