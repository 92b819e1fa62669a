"""Visual invariants and profinite rigidity checks for Coxeter groups."""

__version__ = "0.1.0"

from .graph import (CoxeterGraph, CoxeterMatrix, DynkinDiagram, GraphError, are_isomorphic,
                    canonical_form, complete_graph, cycle_graph, edgeless_graph, from_dynkin,
                    induced_subgraph, path_graph, star_graph, triangle)
from .io import ParseError, load_graph, parse_graph, render_dot, render_json, render_text
from .classification import IrreducibleType, cf_max, classify_component, spherical_subsets
from .gram import classify_via_gram, cross_check, gram_matrix
from .topology import nerve, reduced_cohomology, vcd
from .invariants import (decompose, euler_characteristic, invariant_vector, is_FA, is_FC,
                         is_hyperbolic, is_virtually_free, is_virtually_surface)
from .rigidity import compare, family_membership, genus_bounds, known_iso_normalize
from .enumeration import EnumerationConfig, enumerate_graphs, genus_search

__all__ = [
    "CoxeterGraph", "CoxeterMatrix", "DynkinDiagram", "GraphError", "ParseError",
    "are_isomorphic", "canonical_form", "complete_graph", "cycle_graph", "edgeless_graph",
    "from_dynkin", "induced_subgraph", "path_graph", "star_graph", "triangle",
    "load_graph", "parse_graph", "render_dot", "render_json", "render_text",
    "IrreducibleType", "cf_max", "classify_component", "spherical_subsets",
    "classify_via_gram", "cross_check", "gram_matrix",
    "nerve", "reduced_cohomology", "vcd",
    "decompose", "euler_characteristic", "invariant_vector", "is_FA", "is_FC",
    "is_hyperbolic", "is_virtually_free", "is_virtually_surface",
    "compare", "family_membership", "genus_bounds", "known_iso_normalize",
    "EnumerationConfig", "enumerate_graphs", "genus_search",
]
