import math

import pytest
from hypothesis import given, settings

from coxrigid.graph import (CoxeterGraph, DynkinDiagram, GraphError, are_isomorphic, canonical_form,
                            dynkin_convert, from_coxeter_matrix, from_dynkin, induced_subgraph,
                            is_connected, path_graph, relabel, star_graph, to_coxeter_matrix,
                            triangle)
from coxrigid.io import ParseError, parse_graph, render_dot, render_json, render_text

from strategies import coxeter_graphs, graph_and_permutation


def test_coxeter_matrix_has_inf_exactly_at_non_edges():
    g = path_graph([3, 5])
    cm = to_coxeter_matrix(g)
    assert cm.entries[0][0] == 1
    assert cm.entries[0][1] == 3 and cm.entries[1][2] == 5
    assert cm.entries[0][2] == math.inf
    assert from_coxeter_matrix(cm) == g


def test_dynkin_round_trip_swaps_conventions():
    g = path_graph([3, 2])
    d = dynkin_convert(g)
    # the label-2 edge disappears, the non-edge becomes an infinity edge
    pairs = {frozenset((a, b)): m for a, b, m in d.edges}
    assert pairs[frozenset(("v0", "v1"))] == 3
    assert frozenset(("v1", "v2")) not in pairs
    assert pairs[frozenset(("v0", "v2"))] == math.inf
    assert from_dynkin(d) == g


@pytest.mark.parametrize("bad", [
    (["a", "a"], []),
    (["a", "b"], [("a", "b", 1)]),
    (["a", "b"], [("a", "a", 3)]),
    (["a"], [("a", "b", 3)]),
    (["a", "b"], [("a", "b", 2.5)]),
])
def test_constructor_rejects_malformed_input(bad):
    with pytest.raises(GraphError):
        CoxeterGraph(*bad)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_graph("a b 3\n\n# c\na c x\n")
    assert exc.value.lineno == 4
    assert str(exc.value).startswith("line 4:")
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("a b 3\nb a 4\n")


def test_parse_declares_isolated_vertices():
    g = parse_graph("vertex z\na b 4\n")
    assert g.vertices == ("z", "a", "b")
    assert not is_connected(g)


def test_json_input_is_accepted():
    g = parse_graph('{"vertices": ["x"], "edges": [["x", "y", 6]]}')
    assert g.vertices == ("x", "y") and g.label("x", "y") == 6


def test_dot_output_lists_labels():
    dot = render_dot(triangle(2, 3, 7))
    assert '"a" -- "c" [label="7"];' in dot


@given(coxeter_graphs())
def test_text_and_json_round_trip(g):
    assert parse_graph(render_text(g)) == g
    assert parse_graph(render_json(g)) == g


@given(graph_and_permutation())
def test_canonical_form_is_relabelling_invariant(gp):
    g, perm = gp
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g)
    iso = are_isomorphic(g, h)
    assert iso is not None
    for a, b, m in g.edges:
        assert h.label(iso[a], iso[b]) == m


@given(coxeter_graphs(max_vertices=6))
@settings(max_examples=60)
def test_induced_subgraph_matches_naive_filter(g):
    S = set(g.vertices[::2])
    h = induced_subgraph(g, S)
    naive = {frozenset((a, b)): m for a, b, m in g.edges if a in S and b in S}
    assert {frozenset((a, b)): m for a, b, m in h.edges} == naive
    assert set(h.vertices) == S


def test_canonical_form_separates_path_and_star():
    assert canonical_form(path_graph([3, 3, 3])) != canonical_form(star_graph([3, 3, 3]))
    assert are_isomorphic(path_graph([3, 3, 3]), star_graph([3, 3, 3])) is None
    assert canonical_form(triangle(2, 3, 7)) == canonical_form(triangle(7, 2, 3))
