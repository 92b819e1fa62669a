"""Coxeter graphs, Coxeter matrices and Coxeter-Dynkin diagrams.

A Coxeter graph is a finite simplicial graph with integer edge labels
``m >= 2``. An edge ``{v, w}`` labelled ``m`` encodes the relation
``(vw)^m = 1``; a missing edge encodes no relation, i.e. ``m = inf``.

Internally every graph stores a dense integer label matrix where ``0``
marks a non-edge. Vertex names are opaque strings and only matter for
I/O.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input."""


class CoxeterGraph:
    """A labelled graph presenting a Coxeter group.

    Parameters
    ----------
    vertices : sequence of str
        Vertex names, in order. Order fixes the integer indices used by
        every algorithm.
    edges : iterable of (str, str, int)
        Labelled edges. Labels must be integers ``>= 2``.

    Notes
    -----
    Instances are immutable. Equality compares vertex lists and labels;
    use :func:`are_isomorphic` for isomorphism.
    """

    __slots__ = ("_vertices", "_index", "_mat", "__dict__")

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple] = ()):
        vertices = tuple(str(v) for v in vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = i
        n = len(vertices)
        mat = [[0] * n for _ in range(n)]
        for a, b, m in edges:
            a, b = str(a), str(b)
            if a not in index or b not in index:
                raise GraphError(f"edge {a}-{b} uses an undeclared vertex")
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            if isinstance(m, bool) or int(m) != m:
                raise GraphError(f"label {m!r} on {a}-{b} is not an integer")
            m = int(m)
            if m < 2:
                raise GraphError(f"label {m} on {a}-{b} is below 2")
            i, j = index[a], index[b]
            if mat[i][j]:
                raise GraphError(f"duplicate edge {a}-{b}")
            mat[i][j] = mat[j][i] = m
        self._vertices = vertices
        self._index = index
        self._mat = tuple(tuple(r) for r in mat)

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[int]], vertices: Sequence[str] | None = None):
        """Build a graph from a 0-for-non-edge label matrix."""
        n = len(mat)
        if vertices is None:
            vertices = [f"v{i}" for i in range(n)]
        edges = [(vertices[i], vertices[j], mat[i][j])
                 for i in range(n) for j in range(i + 1, n) if mat[i][j]]
        return cls(vertices, edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def mat(self) -> tuple[tuple[int, ...], ...]:
        """Label matrix with ``0`` for non-edges and on the diagonal."""
        return self._mat

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def label(self, a: str, b: str) -> int | None:
        """Edge label between ``a`` and ``b``, or ``None`` for a non-edge."""
        m = self._mat[self.index(a)][self.index(b)]
        return m or None

    @cached_property
    def edges(self) -> tuple[tuple[str, str, int], ...]:
        V, M = self._vertices, self._mat
        return tuple((V[i], V[j], M[i][j]) for i in range(self.n)
                     for j in range(i + 1, self.n) if M[i][j])

    @cached_property
    def edge_index_list(self) -> tuple[tuple[int, int, int], ...]:
        M = self._mat
        return tuple((i, j, M[i][j]) for i in range(self.n)
                     for j in range(i + 1, self.n) if M[i][j])

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Bitmask of graph neighbours of each vertex."""
        return tuple(sum(1 << j for j, m in enumerate(row) if m) for row in self._mat)

    @cached_property
    def two_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbours joined by a label-2 edge."""
        return tuple(sum(1 << j for j, m in enumerate(row) if m == 2) for row in self._mat)

    @cached_property
    def dynkin_masks(self) -> tuple[int, ...]:
        """Bitmask of Dynkin neighbours (label != 2, including non-edges)."""
        full = (1 << self.n) - 1
        return tuple(full & ~(1 << i) & ~self.two_masks[i] for i in range(self.n))

    def mask_of(self, subset: Iterable[str]) -> int:
        mask = 0
        for v in subset:
            mask |= 1 << self.index(v)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self._vertices) if mask >> i & 1)

    def __eq__(self, other):
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._mat == other._mat

    def __hash__(self):
        return hash((self._vertices, self._mat))

    def __repr__(self):
        body = ", ".join(f"{a}-{b}:{m}" for a, b, m in self.edges)
        return f"CoxeterGraph({list(self._vertices)}, [{body}])"


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric Coxeter matrix with ``1`` on the diagonal and ``inf`` at non-edges."""

    vertices: tuple[str, ...]
    entries: tuple[tuple[float, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class DynkinDiagram:
    """Coxeter-Dynkin diagram: absent edge means label 2, labels are ``>= 3`` or ``inf``."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]

    def label_matrix(self) -> list[list[float]]:
        """Dynkin label matrix, ``2`` at absent edges and ``1`` on the diagonal."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        out = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for a, b, m in self.edges:
            out[idx[a]][idx[b]] = out[idx[b]][idx[a]] = m
        return out

    def is_connected(self) -> bool:
        n = len(self.vertices)
        if n == 0:
            return False
        idx = {v: i for i, v in enumerate(self.vertices)}
        adj = [set() for _ in range(n)]
        for a, b, _ in self.edges:
            adj[idx[a]].add(idx[b])
            adj[idx[b]].add(idx[a])
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == n


def to_coxeter_matrix(g: CoxeterGraph) -> CoxeterMatrix:
    """Coxeter matrix of ``g``: ``1`` on the diagonal, ``inf`` at non-edges."""
    ent = tuple(tuple(1 if i == j else (m if m else INF) for j, m in enumerate(row))
                for i, row in enumerate(g.mat))
    return CoxeterMatrix(g.vertices, ent)


def from_coxeter_matrix(cm: CoxeterMatrix) -> CoxeterGraph:
    n = len(cm.vertices)
    mat = [[0 if (i == j or cm.entries[i][j] == INF) else int(cm.entries[i][j])
            for j in range(n)] for i in range(n)]
    return CoxeterGraph.from_matrix(mat, cm.vertices)


def dynkin_convert(g: CoxeterGraph) -> DynkinDiagram:
    """Switch to the Dynkin convention.

    Label-2 edges disappear and non-edges become ``inf``-labelled edges.
    """
    V, M = g.vertices, g.mat
    edges = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            m = M[i][j]
            if m == 2:
                continue
            edges.append((V[i], V[j], m if m else INF))
    return DynkinDiagram(V, tuple(edges))


def from_dynkin(d: DynkinDiagram) -> CoxeterGraph:
    """Inverse of :func:`dynkin_convert`."""
    L = d.label_matrix()
    n = len(d.vertices)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                mat[i][j] = 0 if L[i][j] == INF else int(L[i][j])
    return CoxeterGraph.from_matrix(mat, d.vertices)


def induced_subgraph(g: CoxeterGraph, S: Iterable[str]) -> CoxeterGraph:
    """Subgraph induced on ``S``, keeping the vertex order of ``g``."""
    mask = g.mask_of(S)
    return induced_by_mask(g, mask)


def induced_by_mask(g: CoxeterGraph, mask: int) -> CoxeterGraph:
    keep = [i for i in range(g.n) if mask >> i & 1]
    V, M = g.vertices, g.mat
    return CoxeterGraph.from_matrix([[M[i][j] for j in keep] for i in keep],
                                    [V[i] for i in keep])


def link_and_star(g: CoxeterGraph, v: str) -> tuple[frozenset, frozenset]:
    """Return ``(lk(v), st(v))``."""
    i = g.index(v)
    lk = frozenset(g.names_of(g.adj_masks[i]))
    return lk, lk | {v}


def component_masks(masks: Sequence[int], within: int) -> list[int]:
    """Connected components of ``within`` under the neighbour ``masks``."""
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & within & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: CoxeterGraph) -> list[frozenset]:
    """Vertex sets of the graph components, ordered by smallest vertex index."""
    full = (1 << g.n) - 1
    return [frozenset(g.names_of(c)) for c in component_masks(g.adj_masks, full)]


def is_connected(g: CoxeterGraph) -> bool:
    return g.n > 0 and len(component_masks(g.adj_masks, (1 << g.n) - 1)) == 1


# ---------------------------------------------------------------------------
# canonical form and isomorphism

def _twin_classes(mat, n):
    # u ~ v when their label rows agree off {u, v}; swapping twins is an automorphism
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        for v in range(u + 1, n):
            if cls[v] == v and all(mat[u][w] == mat[v][w] for w in range(n) if w != u and w != v):
                cls[v] = u
    return cls


def canonical_labelling(mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal encoding of a label matrix and one permutation achieving it.

    Vertices are sorted by their incident-label multiset; among the
    permutations respecting that order the one minimising the row-major
    lower-triangle encoding is chosen. Returns ``(code, perm)`` with
    ``perm[k]`` the original index placed at position ``k``.
    """
    n = len(mat)
    if n == 0:
        return (), ()
    inv = [tuple(sorted(mat[i][j] for j in range(n) if j != i)) for i in range(n)]
    order = sorted(range(n), key=inv.__getitem__)
    cell_at = []
    cells = {}
    for v in order:
        cells.setdefault(inv[v], []).append(v)
    for v in order:
        cell_at.append(cells[inv[v]])
    twin = _twin_classes(mat, n)

    partial = [((), ())]
    for pos in range(n):
        best = None
        nxt = []
        for perm, code in partial:
            used = set(perm)
            tried = set()
            for v in cell_at[pos]:
                if v in used or twin[v] in tried:
                    continue
                tried.add(twin[v])
                row = tuple(mat[v][perm[j]] for j in range(pos))
                if best is None or row < best:
                    best = row
                    nxt = [(perm + (v,), code + row)]
                elif row == best:
                    nxt.append((perm + (v,), code + row))
        partial = nxt
    perm, code = partial[0]
    return code, perm


def canonical_form(g: CoxeterGraph) -> bytes:
    """Canonical byte string; equal exactly for isomorphic labelled graphs."""
    code, _ = canonical_labelling(g.mat)
    return encode_code(g.n, code)


def encode_code(n: int, code: Sequence[int]) -> bytes:
    return f"cxg:{n}:" .encode() + ",".join(map(str, code)).encode()


def are_isomorphic(g1: CoxeterGraph, g2: CoxeterGraph) -> dict[str, str] | None:
    """Label-preserving bijection ``V(g1) -> V(g2)``, or ``None``."""
    if g1.n != g2.n:
        return None
    c1, p1 = canonical_labelling(g1.mat)
    c2, p2 = canonical_labelling(g2.mat)
    if c1 != c2:
        return None
    return {g1.vertices[a]: g2.vertices[b] for a, b in zip(p1, p2)}


def relabel(g: CoxeterGraph, perm: Sequence[int], names: Sequence[str] | None = None) -> CoxeterGraph:
    """Graph whose ``k``-th vertex is vertex ``perm[k]`` of ``g``."""
    M = g.mat
    mat = [[M[a][b] for b in perm] for a in perm]
    if names is None:
        names = [g.vertices[a] for a in perm]
    return CoxeterGraph.from_matrix(mat, names)


# ---------------------------------------------------------------------------
# common shapes

def path_graph(labels: Sequence[int], prefix: str = "v") -> CoxeterGraph:
    """Path whose consecutive edges carry ``labels``."""
    V = [f"{prefix}{i}" for i in range(len(labels) + 1)]
    return CoxeterGraph(V, [(V[i], V[i + 1], m) for i, m in enumerate(labels)])


def star_graph(labels: Sequence[int]) -> CoxeterGraph:
    """Star with centre ``c`` and one leaf per label."""
    V = ["c"] + [f"l{i}" for i in range(len(labels))]
    return CoxeterGraph(V, [("c", V[i + 1], m) for i, m in enumerate(labels)])


def cycle_graph(labels: Sequence[int]) -> CoxeterGraph:
    k = len(labels)
    V = [f"v{i}" for i in range(k)]
    return CoxeterGraph(V, [(V[i], V[(i + 1) % k], m) for i, m in enumerate(labels)])


def triangle(p: int, q: int, r: int) -> CoxeterGraph:
    """The triangle Delta(p, q, r)."""
    return CoxeterGraph(["a", "b", "c"], [("a", "b", p), ("b", "c", q), ("a", "c", r)])


def complete_graph(n: int, label: int) -> CoxeterGraph:
    V = [f"v{i}" for i in range(n)]
    return CoxeterGraph(V, [(V[i], V[j], label) for i in range(n) for j in range(i + 1, n)])


def edgeless_graph(n: int) -> CoxeterGraph:
    return CoxeterGraph([f"v{i}" for i in range(n)])
