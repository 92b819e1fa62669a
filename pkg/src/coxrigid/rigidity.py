"""Rigidity families, genus bounds, comparison and known isomorphisms."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .classification import cf_max
from .graph import CoxeterGraph, canonical_form, component_masks, induced_by_mask
from .invariants import (CONDITIONAL, FIELDS, GENERAL, InvariantVector, cycle_rank, invariant_vector,
                         is_FC, is_finite, is_hyperbolic, is_virtually_abelian, is_virtually_free,
                         is_virtually_surface, label_flags, _induced_cycle)
from .tables import is_lanner_triangle, lanner_graphs

RIGID, ALMOST_RIGID, UNKNOWN = "rigid", "almost_rigid", "unknown"

FAMILIES = (
    ("regular_polygon_reflection", "1a", RIGID, "reflection group of a regular hyperbolic polygon"),
    ("lanner_simplex", "1b", RIGID, "cocompact hyperbolic simplicial reflection group"),
    ("virtually_abelian", "1c", RIGID, "virtually abelian"),
    ("odd_forest", "1d", RIGID, "odd forest"),
    ("labels_div_4", "1e", RIGID, "all labels divisible by 4"),
    ("rank_le_3", "1f", RIGID, "rank at most 3"),
    ("rank4_equal_label", "1g", RIGID, "rank 4, connected, one label n != 4k+2"),
    ("complete_equal_label", "1h", RIGID, "complete, one label n != 4k+2"),
    ("hyperbolic_FC", "2a", ALMOST_RIGID, "hyperbolic of FC type"),
    ("virtually_free", "2b", ALMOST_RIGID, "virtually free"),
    ("virtually_surface", "2c", ALMOST_RIGID, "virtually surface"),
    ("odd", "2d", ALMOST_RIGID, "odd"),
    ("extra_large", "2e", ALMOST_RIGID, "extra large type"),
)


def _is_4k2(n: int) -> bool:
    return n >= 6 and n % 4 == 2


@dataclass(frozen=True)
class FamilyVerdict:
    """Family memberships and the resulting verdict."""

    members: dict
    verdict: str
    citations: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"families": {name: {"member": self.members[name], "item": f"Theorem A ({item})"}
                             for name, item, *_ in FAMILIES},
                "verdict": self.verdict, "citations": list(self.citations),
                "notes": list(self.notes)}


_LANNER_KEYS = None


def _lanner_keys():
    global _LANNER_KEYS
    if _LANNER_KEYS is None:
        _LANNER_KEYS = frozenset(canonical_form(g) for g in lanner_graphs())
    return _LANNER_KEYS


def is_lanner(g: CoxeterGraph) -> bool:
    """Coxeter graph of a compact hyperbolic simplex reflection group."""
    if g.n == 3:
        labels = [m for *_, m in g.edge_index_list]
        return len(labels) == 3 and is_lanner_triangle(*labels)
    if g.n in (4, 5):
        return canonical_form(g) in _lanner_keys()
    return False


def family_membership(g: CoxeterGraph) -> FamilyVerdict:
    """Test every family of the rigidity theorem by its visual definition."""
    flags = label_flags(g)
    labels = sorted({m for *_, m in g.edge_index_list})
    full = (1 << g.n) - 1
    connected = g.n > 0 and len(component_masks(g.adj_masks, full)) == 1
    single = labels[0] if len(labels) == 1 else None
    notes = []

    polygon = g.n >= 3 and _induced_cycle(g, full) and single is not None \
        and not is_finite(g) and not is_virtually_abelian(g)
    rank4 = g.n == 4 and connected and single is not None and not _is_4k2(single)
    if g.n == 4 and connected and single is not None and _is_4k2(single):
        notes.append(f"rank 4 with every label {single} = 4k+2 is not covered")
    complete = flags.complete_equal is not None and not _is_4k2(flags.complete_equal)
    if flags.complete_equal is not None and _is_4k2(flags.complete_equal):
        notes.append(f"complete with every label {flags.complete_equal} = 4k+2 is not covered")
    members = {
        "regular_polygon_reflection": polygon,
        "lanner_simplex": is_lanner(g),
        "virtually_abelian": is_virtually_abelian(g),
        "odd_forest": flags.odd and cycle_rank(g) == 0,
        "labels_div_4": flags.labels_div_4,
        "rank_le_3": g.n <= 3,
        "rank4_equal_label": rank4,
        "complete_equal_label": complete,
        "hyperbolic_FC": is_hyperbolic(g) and is_FC(g),
        "virtually_free": is_virtually_free(g),
        "virtually_surface": is_virtually_surface(g),
        "odd": flags.odd,
        "extra_large": flags.extra_large,
    }
    cites = [f"Theorem A ({item}): {desc}" for name, item, kind, desc in FAMILIES
             if members[name] and kind == RIGID]
    if cites:
        verdict = RIGID
    else:
        cites = [f"Theorem A ({item}): {desc}" for name, item, kind, desc in FAMILIES
                 if members[name]]
        verdict = ALMOST_RIGID if cites else UNKNOWN
    return FamilyVerdict(members, verdict, tuple(cites), tuple(notes))


# ---------------------------------------------------------------------------
# genus bounds

@dataclass(frozen=True)
class GenusBounds:
    """Upper bounds on the rank of any Coxeter group in the genus.

    ``vertex_bounds`` holds ``(bound, source)`` pairs. ``edge_excess``,
    when set, is the value ``|E| - |V|`` every connected odd graph in the
    genus shares.
    """

    label_bound: int
    vertex_bounds: tuple[tuple[Fraction, str], ...]
    edge_excess: int | None = None

    @property
    def effective_bound(self) -> int | None:
        if not self.vertex_bounds:
            return None
        return math.floor(min(b for b, _ in self.vertex_bounds))

    def to_dict(self) -> dict:
        return {"label_bound": self.label_bound,
                "vertex_bounds": [{"bound": str(b), "source": s} for b, s in self.vertex_bounds],
                "effective_bound": self.effective_bound, "edge_excess": self.edge_excess}


def genus_bounds(g: CoxeterGraph, d: int) -> GenusBounds:
    """Bounds on ``|V(Omega)|`` for graphs ``Omega`` in the genus of ``g``.

    Parameters
    ----------
    g : CoxeterGraph
    d : int
        Upper bound on the edge labels of the graphs in the genus.

    Raises
    ------
    ValueError
        If ``d`` is below a label of ``g``.
    """
    labels = [m for *_, m in g.edge_index_list]
    if d < 2 or (labels and d < max(labels)):
        raise ValueError(f"label bound {d} is below the largest label of the graph")
    flags = label_flags(g)
    full = (1 << g.n) - 1
    connected = g.n > 0 and len(component_masks(g.adj_masks, full)) == 1
    bounds = []
    excess = None
    E = len(labels)
    if flags.odd and connected:
        bounds.append((g.n + (1 - Fraction(2, d)) * E, "odd: |V| + (1 - 2/d)|E|"))
        excess = E - g.n
    if is_hyperbolic(g) and is_FC(g):
        bounds.append((Fraction(cf_max(g).rank_bound), "hyperbolic FC: sum of pseudo-ranks over CF_max"))
    if flags.extra_large:
        bounds.append((Fraction(3 * len(cf_max(g).entries)), "extra large: 3 |CF_max|"))
    return GenusBounds(d, tuple(bounds), excess)


# ---------------------------------------------------------------------------
# known isomorphisms

def _pendant_triangle(M, n):
    """``(v, u, w)``: ``v`` has neighbours exactly ``u, w`` via label 2,
    ``m(u, w)`` odd, and ``w`` has no neighbour besides ``u`` and ``v``."""
    for v in range(n):
        nb = [x for x in range(n) if M[v][x]]
        if len(nb) != 2 or any(M[v][x] != 2 for x in nb):
            continue
        a, b = nb
        if not M[a][b] or M[a][b] % 2 == 0:
            continue
        for u, w in ((a, b), (b, a)):
            if all(not M[w][x] for x in range(n) if x not in (u, v, w)):
                return v, u, w
    return None


def known_iso_normalize(g: CoxeterGraph) -> CoxeterGraph:
    """Apply the implemented group-isomorphism moves until none applies.

    1. A vertex ``v`` joined only to ``u`` and ``w`` by label-2 edges,
       with ``m(u, w) = 2k+1`` and ``w`` attached to nothing else, is
       removed and ``m(u, w)`` becomes ``2(2k+1)``.
    2. Each connected odd tree is replaced by the path with its labels
       in increasing order.
    """
    M = [list(r) for r in g.mat]
    names = list(g.vertices)
    while True:
        hit = _pendant_triangle(M, len(names))
        if hit is None:
            break
        v, u, w = hit
        M[u][w] = M[w][u] = 2 * M[u][w]
        del M[v]
        for row in M:
            del row[v]
        del names[v]
    h = CoxeterGraph.from_matrix(M, names)
    out = [[0] * h.n for _ in range(h.n)]
    for comp in component_masks(h.adj_masks, (1 << h.n) - 1):
        idx = [i for i in range(h.n) if comp >> i & 1]
        sub = induced_by_mask(h, comp)
        labels = sorted(m for *_, m in sub.edge_index_list)
        if len(labels) == len(idx) - 1 and all(m % 2 for m in labels):
            for k, m in enumerate(labels):
                out[idx[k]][idx[k + 1]] = out[idx[k + 1]][idx[k]] = m
        else:
            for i in idx:
                for j in idx:
                    out[i][j] = h.mat[i][j]
    return CoxeterGraph.from_matrix(out, h.vertices)


def normal_key(g: CoxeterGraph) -> bytes:
    """Canonical form of the normal form; equal keys mean isomorphic groups."""
    return canonical_form(known_iso_normalize(g))


# ---------------------------------------------------------------------------
# comparison

@dataclass(frozen=True)
class FieldComparison:
    name: str
    value1: object
    value2: object
    status: str
    counts: bool

    @property
    def differs(self) -> bool:
        return self.value1 != self.value2


@dataclass(frozen=True)
class ComparisonReport:
    fields: tuple[FieldComparison, ...]
    first_distinguishing: str | None
    same_known_class: bool

    @property
    def distinguished(self) -> bool:
        return self.first_distinguishing is not None

    @property
    def overall(self) -> str:
        return "distinguished" if self.distinguished else "not_distinguished_by_implemented_invariants"

    def to_dict(self) -> dict:
        from .invariants import _jsonable
        return {"overall": self.overall,
                "first_distinguishing_field": self.first_distinguishing,
                "same_known_isomorphism_class": self.same_known_class,
                "fields": [{"name": f.name, "value1": _jsonable(f.value1),
                            "value2": _jsonable(f.value2), "profinite_status": f.status,
                            "differs": f.differs, "counts": f.counts} for f in self.fields]}


def compare_vectors(v1: InvariantVector, v2: InvariantVector, same_class: bool = False) -> ComparisonReport:
    rows = []
    first = None
    for name, status, _ in FIELDS:
        counts = status == GENERAL or (status == CONDITIONAL and v1.condition_holds(name, v2))
        fc = FieldComparison(name, v1[name], v2[name], status, counts)
        rows.append(fc)
        if first is None and counts and fc.differs:
            first = name
    return ComparisonReport(tuple(rows), first, same_class)


def compare(g1: CoxeterGraph, g2: CoxeterGraph) -> ComparisonReport:
    """Field-by-field comparison of the invariant vectors of two graphs.

    Only fields whose profinite invariance is established (``general``,
    or ``conditional`` with the condition met by both graphs) can make
    the report ``distinguished``.
    """
    return compare_vectors(invariant_vector(g1), invariant_vector(g2),
                           normal_key(g1) == normal_key(g2))
