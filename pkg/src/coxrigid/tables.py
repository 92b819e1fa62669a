"""Standard diagrams, the Lannér tables and the finite catalogue."""
from __future__ import annotations

from dataclasses import dataclass

from .classification import (IrreducibleType, cf_max, dihedral, format_types, order_of_finite,
                             parse_type, pseudo_rank_finite, is_solvable_finite, subset_table)
from .graph import INF, CoxeterGraph, DynkinDiagram, from_dynkin, triangle


def _dynkin(n_vertices: int, edges) -> CoxeterGraph:
    V = tuple(str(i + 1) for i in range(n_vertices))
    E = tuple((str(a), str(b), m) for a, b, m in edges)
    return from_dynkin(DynkinDiagram(V, E))


def _arms(center: int, lengths, label=3):
    """Edges of a star-like tree; vertex numbering starts at 1."""
    edges, nxt = [], center + 1
    for L in lengths:
        prev = center
        for _ in range(L):
            edges.append((prev, nxt, label))
            prev, nxt = nxt, nxt + 1
    return nxt - 1, edges


def type_diagram(t: IrreducibleType) -> CoxeterGraph:
    """Coxeter graph of the standard diagram of an irreducible type."""
    f, n = t.family, t.n
    path = lambda labels: _dynkin(len(labels) + 1, [(i + 1, i + 2, m) for i, m in enumerate(labels)])
    if f == "A":
        return path([3] * (n - 1))
    if f == "B":
        return path([3] * (n - 2) + [4])
    if f == "G":
        return path([6])
    if f == "I":
        return path([t.m])
    if f == "F":
        return path([3, 4, 3])
    if f == "H":
        return path([5] + [3] * (n - 2))
    if f == "D":
        k, e = _arms(1, [1, 1, n - 3])
        return _dynkin(k, e)
    if f == "E":
        k, e = _arms(1, [1, 2, n - 4])
        return _dynkin(k, e)
    if f == "~A":
        if n == 1:
            return _dynkin(2, [(1, 2, INF)])
        return _dynkin(n + 1, [(i + 1, (i + 1) % (n + 1) + 1, 3) for i in range(n + 1)])
    if f == "~B":
        e = [(1, 3, 3), (2, 3, 3)] + [(i, i + 1, 3) for i in range(3, n)] + [(n, n + 1, 4)]
        return _dynkin(n + 1, e)
    if f == "~C":
        return path([4] + [3] * (n - 2) + [4])
    if f == "~D":
        e = [(1, 3, 3), (2, 3, 3)] + [(i, i + 1, 3) for i in range(3, n - 1)] \
            + [(n - 1, n, 3), (n - 1, n + 1, 3)]
        return _dynkin(n + 1, e)
    if f == "~E":
        k, e = _arms(1, {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}[n])
        return _dynkin(k, e)
    if f == "~F":
        return path([3, 3, 4, 3])
    if f == "~G":
        return path([3, 6])
    raise ValueError(f"no standard diagram for {t}")


def product_diagram(types) -> CoxeterGraph:
    """Disjoint union in the Dynkin sense (all cross labels 2)."""
    mats, names = [], []
    for k, t in enumerate(types):
        g = type_diagram(t)
        mats.append(g.mat)
        names += [f"{k}.{v}" for v in g.vertices]
    N = len(names)
    M = [[2] * N for _ in range(N)]
    off = 0
    for mat in mats:
        for i in range(len(mat)):
            for j in range(len(mat)):
                M[off + i][off + j] = mat[i][j]
        off += len(mat)
    for i in range(N):
        M[i][i] = 0
    return CoxeterGraph.from_matrix(M, names)


def finite_types_up_to(rank: int, dihedral_max: int = 12) -> list[IrreducibleType]:
    out = [IrreducibleType("A", 1)]
    for m in range(3, dihedral_max + 1):
        out.append(dihedral(m))
    for n in range(3, rank + 1):
        out += [IrreducibleType("A", n), IrreducibleType("B", n)]
        if n >= 4:
            out.append(IrreducibleType("D", n))
    if rank >= 3:
        out.append(IrreducibleType("H", 3))
    if rank >= 4:
        out += [IrreducibleType("F", 4), IrreducibleType("H", 4)]
    for n in (6, 7, 8):
        if rank >= n:
            out.append(IrreducibleType("E", n))
    return out


def affine_types_up_to(size: int) -> list[IrreducibleType]:
    """Irreducible affine types with at most ``size`` generators."""
    out = []
    for n in range(1, size):
        out.append(IrreducibleType("~A", n))
        if n >= 2:
            out.append(IrreducibleType("~C", n))
        if n >= 3:
            out.append(IrreducibleType("~B", n))
        if n >= 4:
            out.append(IrreducibleType("~D", n))
    out.append(IrreducibleType("~G", 2))
    if size >= 5:
        out.append(IrreducibleType("~F", 4))
    for n in (6, 7, 8):
        if size >= n + 1:
            out.append(IrreducibleType("~E", n))
    return [t for t in out if t.size <= size]


# ---------------------------------------------------------------------------
# Lannér diagrams, Dynkin convention, unlabelled edges are 3

@dataclass(frozen=True)
class LannerRow:
    label: str
    n_vertices: int
    edges: tuple[tuple[int, int, int], ...]
    printed: tuple[str, ...]

    @property
    def graph(self) -> CoxeterGraph:
        return _dynkin(self.n_vertices, self.edges)


LANNER4 = (
    LannerRow("L1", 4, ((1, 2, 3), (2, 3, 5), (3, 4, 3)), ("A1xA2", "A1xA2", "H3", "H3")),
    LannerRow("L2", 4, ((1, 2, 5), (2, 3, 3), (3, 4, 4)), ("A1xB2", "A1xH2", "B3", "H3")),
    LannerRow("L3", 4, ((1, 2, 5), (2, 3, 3), (3, 4, 5)), ("A1xH2", "A1xH2", "H3", "H3")),
    LannerRow("L4", 4, ((1, 2, 5), (2, 3, 3), (2, 4, 3)), ("A1^3", "A3", "H3", "H3")),
    LannerRow("L5", 4, ((1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 1, 3)), ("A3", "A3", "B3", "B3")),
    LannerRow("L6", 4, ((1, 2, 4), (2, 3, 3), (3, 4, 4), (4, 1, 3)), ("B3", "B3", "B3", "B3")),
    LannerRow("L7", 4, ((1, 2, 5), (2, 3, 3), (3, 4, 3), (4, 1, 3)), ("A3", "A3", "H3", "H3")),
    LannerRow("L8", 4, ((1, 2, 5), (2, 3, 3), (3, 4, 4), (4, 1, 3)), ("B3", "B3", "H3", "H3")),
    LannerRow("L9", 4, ((1, 2, 5), (2, 3, 3), (3, 4, 5), (4, 1, 3)), ("H3", "H3", "H3", "H3")),
)

LANNER5 = (
    LannerRow("L1", 5, ((1, 2, 5), (2, 3, 3), (3, 4, 3), (4, 5, 3)),
              ("A1xA3", "A1xH3", "A2xH2", "H4", "A4")),
    LannerRow("L2", 5, ((1, 2, 5), (2, 3, 3), (3, 4, 3), (4, 5, 4)),
              ("A1xH3", "A1xH3", "H2^2", "H4", "H4")),
    LannerRow("L3", 5, ((1, 2, 5), (2, 3, 3), (3, 4, 3), (4, 5, 5)),
              ("A1xB3", "A1xH3", "B2xH2", "B4", "H4")),
    LannerRow("L4", 5, ((1, 2, 3), (2, 3, 3), (3, 4, 5), (2, 5, 3)),
              ("A1xA3", "A1^2xH2", "D4", "H4", "H4")),
    LannerRow("L5", 5, ((1, 2, 3), (2, 3, 4), (3, 4, 3), (4, 5, 3), (5, 1, 3)),
              ("A4", "A4", "B4", "B4", "F4")),
)

# The printed CF_max columns of rows L2 and L3 of the rank-5 table are
# interchanged relative to their diagrams; recomputation confirms the swap.
ERRATA = {("lanner5", "L2"): "L3", ("lanner5", "L3"): "L2"}

TABLES = {"lanner4": LANNER4, "lanner5": LANNER5}


def parse_product(s: str) -> tuple[str, ...]:
    """Canonical factor list of a printed product such as ``A1^2xH2``."""
    out = []
    for part in s.split("x"):
        base, _, exp = part.partition("^")
        out += [parse_type(base).name] * (int(exp) if exp else 1)
    return tuple(sorted(out))


def _canon_column(col) -> list[tuple[str, ...]]:
    return sorted(parse_product(s) for s in col)


@dataclass(frozen=True)
class TableCheck:
    label: str
    graph: CoxeterGraph
    expected: tuple[str, ...]
    computed: tuple[str, ...]
    erratum: str | None
    match: bool


def check_lanner(name: str) -> list[TableCheck]:
    """Recompute CF_max for every diagram of a stored Lannér table."""
    rows = TABLES[name]
    by_label = {r.label: r for r in rows}
    out = []
    for r in rows:
        g = r.graph
        computed = sorted(format_types(e.types) for e in cf_max(g).entries)
        src = ERRATA.get((name, r.label))
        expected = by_label[src].printed if src else r.printed
        ok = _canon_column(expected) == sorted(tuple(sorted(t.name for t in e.types))
                                               for e in cf_max(g).entries)
        out.append(TableCheck(r.label, g, tuple(expected), tuple(computed), src, ok))
    return out


def lanner_graphs(rank: int | None = None) -> list[CoxeterGraph]:
    """Coxeter graphs of the stored rank-4 and rank-5 Lannér diagrams."""
    out = []
    if rank in (None, 4):
        out += [r.graph for r in LANNER4]
    if rank in (None, 5):
        out += [r.graph for r in LANNER5]
    return out


def is_lanner_triangle(p: int, q: int, r: int) -> bool:
    return p * q + q * r + r * p < p * q * r


def lanner_triangles(max_label: int) -> list[CoxeterGraph]:
    return [triangle(p, q, r) for p in range(2, max_label + 1) for q in range(p, max_label + 1)
            for r in range(q, max_label + 1) if is_lanner_triangle(p, q, r)]


# finite catalogue: (type, order read from the literature where available)
FINITE_CATALOGUE = (
    ("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("A5", 720),
    ("B2", 8), ("B3", 48), ("B4", 384), ("B5", 3840),
    ("D4", 192), ("D5", 1920), ("D6", 23040),
    ("E6", 51840), ("E7", 2903040), ("E8", 696729600),
    ("F4", 1152), ("G2", 12), ("H3", 120), ("H4", 14400),
    ("I2(5)", 10), ("I2(7)", 14), ("I2(8)", 16),
)


def check_finite() -> list[dict]:
    """Rebuild each catalogue diagram, reclassify it and compare orders."""
    out = []
    for name, order in FINITE_CATALOGUE:
        t = parse_type(name)
        g = type_diagram(t)
        types = subset_table(g).types_of((1 << g.n) - 1)
        recomputed = types[0].name if len(types) == 1 else format_types(types)
        ok = recomputed == t.name and order_of_finite(types) == order
        out.append({"type": name, "rank": g.n, "order": order,
                    "computed_type": recomputed, "computed_order": order_of_finite(types),
                    "pseudorank": pseudo_rank_finite(types),
                    "solvable": is_solvable_finite(types[0]), "match": ok})
    return out
