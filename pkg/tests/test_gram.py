import numpy as np
import pytest

from coxrigid.enumeration import EnumerationConfig, enumerate_graphs
from coxrigid.gram import (OracleDisagreement, classify_via_gram, cross_check, gram_matrix,
                           signature_class)
from coxrigid.graph import cycle_graph, edgeless_graph, path_graph, triangle
from coxrigid.tables import finite_types_up_to, type_diagram


def test_gram_entries():
    assert gram_matrix(edgeless_graph(1)).tolist() == [[1.0]]
    assert gram_matrix(path_graph([2]))[0, 1] == pytest.approx(0.0, abs=1e-15)
    assert gram_matrix(path_graph([3]))[0, 1] == pytest.approx(-0.5)
    assert gram_matrix(edgeless_graph(2))[0, 1] == -1.0
    B = gram_matrix(triangle(2, 3, 7))
    assert np.allclose(B, B.T) and np.all(np.diag(B) == 1)


def test_signature_examples():
    assert signature_class(gram_matrix(triangle(2, 3, 5))).kind == "positive_definite"
    s = signature_class(gram_matrix(triangle(3, 3, 3)))
    assert (s.kind, s.corank) == ("positive_semidefinite", 1)
    assert signature_class(gram_matrix(triangle(2, 3, 7))).verdict == "generic"


def test_component_verdicts():
    assert [k for _, k in classify_via_gram(edgeless_graph(2))] == ["affine"]
    assert [k for _, k in classify_via_gram(cycle_graph([3, 3, 3, 3]))] == ["generic"]
    for t in finite_types_up_to(6):
        assert [k for _, k in classify_via_gram(type_diagram(t))] == ["finite"]


def test_principal_submatrices_of_definite_forms_are_definite():
    rng = np.random.default_rng(7)
    for t in finite_types_up_to(7):
        B = gram_matrix(type_diagram(t))
        for _ in range(5):
            idx = sorted(rng.choice(len(B), size=rng.integers(1, len(B) + 1), replace=False))
            assert signature_class(B[np.ix_(idx, idx)]).kind == "positive_definite"


def test_cross_check_passes_on_small_graphs():
    for g in enumerate_graphs(EnumerationConfig(3, 7)):
        cross_check(g)


def test_disagreement_is_raised(monkeypatch):
    import coxrigid.gram as gram
    monkeypatch.setattr(gram, "signature_class", lambda B, eps=1e-9: gram.Signature("indefinite"))
    with pytest.raises(OracleDisagreement):
        cross_check(path_graph([3]))
