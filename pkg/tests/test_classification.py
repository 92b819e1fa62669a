import itertools

import pytest
from hypothesis import given, settings

from coxrigid.classification import (IrreducibleType, cf_max, classify_component, dihedral,
                                     is_solvable_finite, is_spherical, order_of_finite, parse_type,
                                     pseudo_rank_finite, spherical_subsets, subset_table)
from coxrigid.graph import (DynkinDiagram, cycle_graph, dynkin_convert, edgeless_graph, path_graph,
                            triangle)
from coxrigid.tables import (FINITE_CATALOGUE, affine_types_up_to, check_finite, finite_types_up_to,
                             type_diagram)

from oracles import dynkin_blocks, gram_kind, group_order, sub
from strategies import coxeter_graphs


def _single(g):
    return classify_component(dynkin_convert(g))


def test_single_vertex_and_dihedral_examples():
    assert _single(edgeless_graph(1)) == IrreducibleType("A", 1)
    assert _single(path_graph([5])).name == "I2(5)"
    assert _single(triangle(3, 3, 3)).name == "~A2"


def test_dihedral_coincidences_are_normalised():
    assert dihedral(3).name == "A2"
    assert dihedral(4).name == "B2"
    assert dihedral(6).name == "G2"
    assert parse_type("I2(4)") == parse_type("B2")


@pytest.mark.parametrize("name,order", [("I2(6)", 12), ("H3", 120), ("E6", 51840)])
def test_order_examples(name, order):
    assert order_of_finite([parse_type(name)]) == order


@pytest.mark.parametrize("name,order", [(n, o) for n, o in FINITE_CATALOGUE if o <= 15000])
def test_orders_match_group_closure(name, order):
    # the Tits representation is faithful, so closing up the generators counts |W|
    assert group_order(type_diagram(parse_type(name)).mat) == order


def test_catalogue_round_trip():
    assert all(r["match"] for r in check_finite())


@pytest.mark.parametrize("types,expected", [(["B3"], 4), (["I2(6)"], 3), (["A4"], 4),
                                            (["B5"], 6), (["I2(10)"], 3), (["I2(8)"], 2),
                                            (["A1", "B3"], 5)])
def test_pseudo_rank(types, expected):
    assert pseudo_rank_finite([parse_type(t) for t in types]) == expected


def test_pseudo_rank_dominates_rank():
    for t in finite_types_up_to(8):
        pr = pseudo_rank_finite([t])
        special = (t.family == "B" and t.n % 2 == 1) or (t.family in "IG" and t.order // 2 % 4 == 2
                                                          and t.order >= 12)
        assert pr >= t.n
        assert (pr > t.n) == special, t.name


@pytest.mark.parametrize("name,solvable", [("H3", False), ("B4", True), ("A5", False),
                                           ("A3", True), ("D4", True), ("F4", True), ("D5", False),
                                           ("I2(9)", True), ("H4", False), ("E6", False)])
def test_solvable(name, solvable):
    assert is_solvable_finite(parse_type(name)) is solvable


def test_every_catalogue_diagram_classifies_to_itself():
    for t in finite_types_up_to(8) + affine_types_up_to(9):
        g = type_diagram(t)
        got = subset_table(g).types_of((1 << g.n) - 1) if t.is_finite else None
        if t.is_finite:
            assert got == (t,), t.name
        else:
            assert _single(g) == t, t.name
            assert gram_kind(g.mat) == "affine", t.name


def test_spherical_examples():
    assert is_spherical(edgeless_graph(2), [])
    assert not is_spherical(edgeless_graph(2), ["v0", "v1"])
    assert is_spherical(triangle(2, 3, 5), ["a", "b", "c"])
    assert [s.vertices for s in spherical_subsets(edgeless_graph(1))] == [(), ("v0",)]
    subsets = spherical_subsets(triangle(3, 3, 3))
    assert sorted(len(s.vertices) for s in subsets) == [0, 1, 1, 1, 2, 2, 2]


@given(coxeter_graphs(max_vertices=6, max_label=6))
@settings(max_examples=80, deadline=None)
def test_spherical_table_matches_gram_oracle(g):
    tab = subset_table(g)
    for mask in range(1 << g.n):
        idx = [i for i in range(g.n) if mask >> i & 1]
        M = sub(g.mat, idx)
        oracle = all(gram_kind(sub(M, b)) == "finite" for b in dynkin_blocks(M))
        assert (mask in tab.spherical) == oracle


@given(coxeter_graphs(max_vertices=6, max_label=6))
@settings(max_examples=80, deadline=None)
def test_spherical_subsets_are_downward_closed_and_covered(g):
    tab = subset_table(g)
    maxi = tab.maximal
    for m in tab.spherical:
        sub_ = m
        while sub_:
            sub_ = (sub_ - 1) & m
            assert sub_ in tab.spherical
        assert any(m & ~M == 0 for M in maxi)
    for a, b in itertools.combinations(maxi, 2):
        assert a & ~b and b & ~a


def test_cf_max_examples():
    rep = cf_max(edgeless_graph(3))
    assert rep.type_multiset() == ["A1", "A1", "A1"]
    assert rep.rank_bound == 3
    from coxrigid.tables import LANNER4, LANNER5
    assert sorted(cf_max(LANNER4[4].graph).type_multiset()) == ["A3", "A3", "B3", "B3"]
    assert sorted(cf_max(LANNER5[4].graph).type_multiset()) == ["A4", "A4", "B4", "B4", "F4"]
    d = cf_max(LANNER4[4].graph).to_dict()
    assert {"subsets", "intersections", "rank_bound"} <= set(d)
