"""Hypothesis strategies for random Coxeter graphs."""
from hypothesis import strategies as st

from coxrigid.graph import CoxeterGraph


@st.composite
def coxeter_graphs(draw, min_vertices=1, max_vertices=6, max_label=7):
    n = draw(st.integers(min_vertices, max_vertices))
    V = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.sampled_from([0] + list(range(2, max_label + 1))))
            if m:
                edges.append((V[i], V[j], m))
    return CoxeterGraph(V, edges)


@st.composite
def graph_and_permutation(draw, **kw):
    g = draw(coxeter_graphs(**kw))
    return g, draw(st.permutations(range(g.n)))
