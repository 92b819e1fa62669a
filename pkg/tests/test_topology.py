import itertools
import random

import pytest
import sympy
from hypothesis import given, settings

from coxrigid.graph import complete_graph, edgeless_graph, triangle
from coxrigid.invariants import is_finite, is_virtually_surface, virtually_surface_split
from coxrigid.topology import (SimplicialComplex, nerve, reduced_cohomology, smith_invariants, vcd)
from coxrigid.classification import subset_table

from strategies import coxeter_graphs


def _closure(top_faces):
    faces = set()
    for f in top_faces:
        for k in range(1, len(f) + 1):
            faces.update(itertools.combinations(sorted(f), k))
    verts = sorted({v for f in faces for v in f})
    return SimplicialComplex(tuple(verts), frozenset(faces))


def test_nerve_examples():
    K = nerve(triangle(3, 3, 3))
    assert len(K.faces) == 6 and K.dimension == 1 and K.is_closed()
    assert nerve(complete_graph(3, 2)).dimension == 2
    assert len(nerve(edgeless_graph(2)).faces) == 2


def test_cohomology_examples():
    circle = reduced_cohomology(nerve(triangle(3, 3, 3)))
    assert circle.groups == ((0, ()), (1, ()))
    two_points = reduced_cohomology(nerve(edgeless_graph(2)))
    assert two_points.groups[0] == (1, ())
    simplex = reduced_cohomology(nerve(complete_graph(4, 2)))
    assert simplex.top_degree is None
    empty = reduced_cohomology(SimplicialComplex((), frozenset()))
    assert empty.empty and empty.nonzero(-1) and empty.top_degree == -1
    assert set(circle.to_dict()["degrees"]) == {"0", "1"}


def test_projective_plane_has_two_torsion():
    # six-vertex triangulation of RP^2
    rp2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6),
           (3, 4, 6), (3, 5, 6)]
    h = reduced_cohomology(_closure(rp2))
    assert h.groups[1] == (0, ())
    assert h.groups[2] == (0, (2,))


def test_smith_invariants_match_sympy():
    rnd = random.Random(3)
    from sympy.matrices.normalforms import smith_normal_form
    for _ in range(60):
        r, c = rnd.randint(1, 5), rnd.randint(1, 5)
        A = [[rnd.randint(-4, 4) for _ in range(c)] for _ in range(r)]
        S = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
        ref = [abs(S[i, i]) for i in range(min(r, c)) if S[i, i] != 0]
        got = smith_invariants(A)
        assert got == ref
        assert all(b % a == 0 for a, b in zip(got, got[1:]))


def test_rational_rank_agrees_with_sympy_rank():
    rnd = random.Random(11)
    for _ in range(30):
        verts = range(rnd.randint(3, 6))
        tops = [tuple(rnd.sample(list(verts), rnd.randint(1, 3))) for _ in range(rnd.randint(1, 6))]
        K = _closure(tops)
        by = {}
        for f in K.faces:
            by.setdefault(len(f), []).append(f)
        h = reduced_cohomology(K)
        # Euler characteristic check: sum (-1)^k rank of reduced cohomology
        chi = sum((-1) ** (len(f) - 1) for f in K.faces) - 1
        assert chi == sum((-1) ** k * r for k, (r, _) in enumerate(h.groups))


@pytest.mark.parametrize("g,expected", [(complete_graph(3, 2), 0), (edgeless_graph(2), 1),
                                        (triangle(2, 3, 7), 2), (triangle(3, 3, 3), 2)])
def test_vcd_examples(g, expected):
    assert vcd(g) == expected


@given(coxeter_graphs(max_vertices=5, max_label=5))
@settings(max_examples=80, deadline=None)
def test_vcd_properties(g):
    v = vcd(g)
    tab = subset_table(g)
    assert (v == 0) == is_finite(g)
    assert v <= max(bin(m).count("1") for m in tab.spherical)
    if is_virtually_surface(g):
        assert v == 2
