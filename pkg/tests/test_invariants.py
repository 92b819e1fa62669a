from fractions import Fraction

import pytest
from hypothesis import given, settings

from coxrigid.classification import subset_table
from coxrigid.graph import (complete_graph, cycle_graph, edgeless_graph, path_graph, star_graph,
                            triangle)
from coxrigid.invariants import (FIELDS, GENERAL, decompose, ends, euler_characteristic, is_FA,
                                 is_FC, is_finite, is_hyperbolic, is_virtually_abelian,
                                 is_virtually_free, is_virtually_surface, invariant_vector,
                                 label_flags, schur_data, two_term_chi)
from coxrigid.tables import affine_types_up_to, type_diagram
from coxrigid.topology import vcd

from strategies import coxeter_graphs

SQUARE2 = cycle_graph([2, 2, 2, 2])
SQUARE3 = cycle_graph([3, 3, 3, 3])


def test_decompose_examples():
    d = decompose(triangle(2, 2, 3))
    assert sorted(t.name for t in d.spherical) == ["A1", "A2"]
    assert d.affine == () and d.generic_vertices == ()
    assert [t.name for t in decompose(triangle(3, 3, 3)).affine] == ["~A2"]
    assert [t.name for t in decompose(SQUARE2).affine] == ["~A1", "~A1"]
    d = decompose(path_graph([3, 3]))
    assert set(d.spherical_vertices) | set(d.affine_vertices) | set(d.generic_vertices) \
        == {"v0", "v1", "v2"}


def test_free_product_marker():
    g = edgeless_graph(3)
    d = decompose(g)
    assert d.free_product and len(d.components) == 3


@pytest.mark.parametrize("g,fa", [(triangle(2, 3, 7), True), (edgeless_graph(2), False),
                                  (path_graph([3, 3]), False)])
def test_FA(g, fa):
    assert is_FA(g) is fa


@pytest.mark.parametrize("g,fc", [(star_graph([3, 7, 4]), True), (triangle(2, 3, 7), False),
                                  (SQUARE3, True)])
def test_FC(g, fc):
    assert is_FC(g) is fc


@pytest.mark.parametrize("g,hyp", [(triangle(2, 3, 7), True), (triangle(3, 3, 3), False),
                                   (SQUARE2, False)])
def test_hyperbolic(g, hyp):
    assert is_hyperbolic(g) is hyp


@pytest.mark.parametrize("g,e", [(complete_graph(3, 2), 0), (edgeless_graph(2), 2),
                                 (path_graph([3, 3]), "inf"), (SQUARE3, 1),
                                 (triangle(2, 3, 7), 1), (edgeless_graph(3), "inf")])
def test_ends(g, e):
    assert ends(g) == e


@pytest.mark.parametrize("g,vf", [(path_graph([5, 3, 7]), True), (SQUARE3, False),
                                  (triangle(2, 3, 7), False)])
def test_virtually_free(g, vf):
    assert is_virtually_free(g) is vf


@pytest.mark.parametrize("g,vs", [(triangle(3, 3, 3), True), (SQUARE3, True),
                                  (path_graph([3, 3]), False), (triangle(2, 3, 5), False)])
def test_virtually_surface(g, vs):
    assert is_virtually_surface(g) is vs


@pytest.mark.parametrize("g,va", [(triangle(3, 3, 3), True), (complete_graph(4, 2), True),
                                  (path_graph([3, 3]), False), (edgeless_graph(2), True)])
def test_virtually_abelian(g, va):
    assert is_virtually_abelian(g) is va


def test_label_flags():
    assert label_flags(star_graph([3, 5])).odd
    f = label_flags(cycle_graph([4, 4, 4, 4]))
    assert f.strongly_even and f.labels_div_4 and f.extra_large
    f = label_flags(path_graph([6]))
    assert not (f.odd or f.strongly_even or f.labels_div_4)
    # every label is at least 4, so a single 6-edge is extra large by definition
    assert f.extra_large
    assert label_flags(complete_graph(4, 3)).complete_equal == 3


def test_schur_examples():
    s = schur_data(path_graph([2]))
    assert (s.nu, s.mu, s.xi, s.multiplier_rank) == (1, 0, 2, 1)
    s = schur_data(star_graph([3, 5, 3, 7]))
    assert (s.nu, s.mu, s.xi, s.multiplier_rank) == (0, 4, 1, 0)
    s = schur_data(triangle(2, 2, 3))
    assert (s.nu, s.mu, s.xi, s.multiplier_rank) == (1, 1, 2, 1)


@pytest.mark.parametrize("g,chi", [(edgeless_graph(2), Fraction(0)),
                                   (triangle(2, 3, 7), Fraction(-1, 84)),
                                   (triangle(3, 3, 3), Fraction(0))])
def test_chi_examples(g, chi):
    assert euler_characteristic(g) == chi


def test_chi_vanishes_on_affine_diagrams():
    for t in affine_types_up_to(9):
        assert euler_characteristic(type_diagram(t)) == 0, t.name


@given(coxeter_graphs(max_vertices=6, max_label=7))
@settings(max_examples=100, deadline=None)
def test_invariant_relations(g):
    tab = subset_table(g)
    if max(bin(m).count("1") for m in tab.spherical) <= 2:
        assert euler_characteristic(g) == two_term_chi(g)
    if is_finite(g):
        from coxrigid.classification import order_of_finite
        assert euler_characteristic(g) == Fraction(1, order_of_finite(tab.types_of((1 << g.n) - 1)))
    e = ends(g)
    assert e in (0, 1, 2, "inf")
    assert (e == 0) == is_finite(g)
    if is_virtually_free(g):
        assert vcd(g) <= 1
        if not is_finite(g):
            assert e in (2, "inf")
    if is_hyperbolic(g):
        assert not any(t.kind == "affine" and t.size >= 3
                       for m in range(1, 1 << g.n)
                       for t in [_single_type(g, m)] if t is not None)
    s = schur_data(g)
    assert s.multiplier_rank >= 0


def _single_type(g, mask):
    from coxrigid.classification import classify_mask, dynkin_component_masks
    comps = dynkin_component_masks(g, mask)
    return classify_mask(g, mask) if len(comps) == 1 else None


def test_vector_of_triangle_237():
    v = invariant_vector(triangle(2, 3, 7))
    assert v["ends"] == 1 and v["FA"] and v["hyperbolic"] and v["vcd"] == 2
    assert v["chi"] == Fraction(-1, 84) and v["virtually_surface"]
    flat = v.flat()
    assert flat["chi"] == "-1/84"
    assert list(flat) == [name for name, *_ in FIELDS]
    assert v.to_dict()["chi"]["profinite_status"] == GENERAL


def test_vector_of_affine_triangle():
    v = invariant_vector(triangle(3, 3, 3))
    assert (v["ends"], v["virtually_abelian"], v["chi"], v["vcd"]) == (1, True, 0, 2)
    v = invariant_vector(edgeless_graph(2))
    assert (v["ends"], v["chi"], v["vcd"]) == (2, 0, 1)
