"""Finite and affine Coxeter types, spherical subsets and CF_max.

Connected Dynkin diagrams are matched structurally against the finite
and affine catalogues; everything else is ``Generic``. Spherical subsets
are found with a bitmask scan over all vertex subsets of the graph.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import INF, CoxeterGraph, DynkinDiagram, component_masks

FINITE, AFFINE, GENERIC = "finite", "affine", "generic"

_FINITE_FAMILIES = {"A", "B", "D", "E", "F", "G", "H", "I"}
_AFFINE_FAMILIES = {"~A", "~B", "~C", "~D", "~E", "~F", "~G"}


@dataclass(frozen=True, order=True)
class IrreducibleType:
    """Type of a connected Dynkin diagram.

    Parameters
    ----------
    family : str
        ``A B D E F G H I`` for finite types, ``~A ~B ~C ~D ~E ~F ~G``
        for affine types and ``Generic`` otherwise.
    n : int
        Subscript. For finite types this is the rank; an affine ``~X_n``
        has ``n + 1`` generators; for ``Generic`` it is the vertex count.
    m : int, optional
        Dihedral parameter of ``I2(m)``.
    """

    family: str
    n: int
    m: int = 0

    @property
    def kind(self) -> str:
        if self.family in _FINITE_FAMILIES:
            return FINITE
        if self.family in _AFFINE_FAMILIES:
            return AFFINE
        return GENERIC

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def size(self) -> int:
        """Number of generators."""
        return self.n + 1 if self.kind == AFFINE else self.n

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        if self.family == "Generic":
            return f"Generic({self.n})"
        return f"{self.family}{self.n}"

    def __str__(self):
        return self.name

    @property
    def order(self) -> int:
        return order_of_finite([self])

    @property
    def pseudo_rank(self) -> int:
        return pseudo_rank_finite([self])


def dihedral(m: int) -> IrreducibleType:
    """``I2(m)`` with the usual coincidences normalised."""
    if m == 3:
        return IrreducibleType("A", 2)
    if m == 4:
        return IrreducibleType("B", 2)
    if m == 6:
        return IrreducibleType("G", 2)
    return IrreducibleType("I", 2, m)


def parse_type(s: str) -> IrreducibleType:
    """Inverse of ``IrreducibleType.name``; ``H2`` is read as ``I2(5)``."""
    s = s.strip()
    if s.startswith("I2(") and s.endswith(")"):
        return dihedral(int(s[3:-1]))
    if s == "H2":
        return dihedral(5)
    if s.startswith("~"):
        return IrreducibleType(s[:2], int(s[2:]))
    fam, n = s[0], int(s[1:])
    if n == 2 and fam in "ABG":
        return dihedral({"A": 3, "B": 4, "G": 6}[fam])
    return IrreducibleType(fam, n)


_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                       ("F", 4): 1152, ("H", 3): 120, ("H", 4): 14400, ("G", 2): 12}


def order_of_finite(types: Iterable[IrreducibleType]) -> int:
    """Order of a product of finite irreducible Coxeter groups."""
    total = 1
    for t in types:
        if not t.is_finite:
            raise ValueError(f"{t} is not a finite type")
        f, n = t.family, t.n
        if f == "A":
            o = math.factorial(n + 1)
        elif f == "B":
            o = 2 ** n * math.factorial(n)
        elif f == "D":
            o = 2 ** (n - 1) * math.factorial(n)
        elif f == "I":
            o = 2 * t.m
        else:
            o = _EXCEPTIONAL_ORDERS[(f, n)]
        total *= o
    return total


def pseudo_rank_finite(types: Iterable[IrreducibleType]) -> int:
    """Sum of pseudo-ranks of finite irreducible factors.

    ``B_{2k+1}`` contributes ``2k+2`` and ``I2(4k+2)`` with ``k >= 1``
    (including ``G2``) contributes 3; every other factor its rank.
    """
    total = 0
    for t in types:
        if not t.is_finite:
            raise ValueError(f"{t} is not a finite type")
        if t.family == "B" and t.n % 2 == 1:
            total += t.n + 1
        elif t.family == "G" or (t.family == "I" and t.m % 4 == 2):
            total += 3
        else:
            total += t.n
    return total


_SOLVABLE = {("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("B", 4),
             ("D", 4), ("F", 4), ("G", 2)}


def is_solvable_finite(t: IrreducibleType) -> bool:
    if not t.is_finite:
        raise ValueError(f"{t} is not a finite type")
    return t.family == "I" or (t.family, t.n) in _SOLVABLE


def group_key(types: Iterable[IrreducibleType]) -> tuple[str, ...]:
    """Isomorphism key of a finite Coxeter group given by its types.

    Uses the direct-product splittings ``B_{2k+1} = A1 x D_{2k+1}``
    (``D3 = A3``) and ``I2(4k+2) = A1 x I2(2k+1)``; two products of
    finite irreducibles are isomorphic groups exactly when their keys agree.
    """
    out = []
    for t in types:
        if t.family == "B" and t.n % 2 == 1:
            out += ["A1", "A3" if t.n == 3 else f"D{t.n}"]
        elif t.family == "G":
            out += ["A1", "A2"]
        elif t.family == "I" and t.m % 4 == 2:
            out += ["A1", dihedral(t.m // 2).name]
        else:
            out.append(t.name)
    return tuple(sorted(out))


def format_types(types: Sequence[IrreducibleType]) -> str:
    if not types:
        return "1"
    c = Counter(t.name for t in types)
    return "x".join(k if v == 1 else f"{k}^{v}" for k, v in sorted(c.items()))


# ---------------------------------------------------------------------------
# structural matching

def _classify_local(k: int, lab: dict[tuple[int, int], float]) -> IrreducibleType:
    """Classify a connected Dynkin diagram on vertices ``0..k-1``.

    ``lab`` maps ``(i, j)`` with ``i < j`` to a Dynkin label ``>= 3`` or ``inf``.
    """
    generic = IrreducibleType("Generic", k)
    if k == 1:
        return IrreducibleType("A", 1)
    labels = list(lab.values())
    if k == 2:
        m = labels[0]
        return IrreducibleType("~A", 1) if m == INF else dihedral(int(m))
    if INF in labels:
        return generic
    nbr = [[] for _ in range(k)]
    for (i, j), m in lab.items():
        nbr[i].append(j)
        nbr[j].append(i)
    deg = [len(x) for x in nbr]
    E = len(lab)

    def L(i, j):
        return lab[(i, j) if i < j else (j, i)]

    if E == k:
        if all(d == 2 for d in deg) and all(m == 3 for m in labels):
            return IrreducibleType("~A", k - 1)
        return generic
    if E != k - 1:
        return generic

    odd = [m for m in labels if m != 3]
    if any(m > 6 for m in odd):
        return generic

    if max(deg) <= 2:
        end = deg.index(1)
        seq, prev, cur = [], -1, end
        while True:
            nx = [w for w in nbr[cur] if w != prev]
            if not nx:
                break
            seq.append(L(cur, nx[0]))
            prev, cur = cur, nx[0]
        return _classify_path(seq, generic)

    branch = [v for v in range(k) if deg[v] >= 3]
    arms_of = {}
    for b in branch:
        arms = []
        for w in nbr[b]:
            path_labels, prev, cur = [L(b, w)], b, w
            while deg[cur] == 2:
                nx = [x for x in nbr[cur] if x != prev][0]
                path_labels.append(L(cur, nx))
                prev, cur = cur, nx
            arms.append((path_labels, cur))
        arms_of[b] = arms

    if len(branch) == 1:
        b = branch[0]
        arms = arms_of[b]
        if deg[b] == 4:
            if k == 5 and not odd:
                return IrreducibleType("~D", 4)
            return generic
        lens = sorted(len(a[0]) for a in arms)
        if not odd:
            p, q, r = lens
            if (p, q) == (1, 1):
                return IrreducibleType("D", r + 3)
            simply = {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7), (1, 2, 4): ("E", 8),
                      (2, 2, 2): ("~E", 6), (1, 3, 3): ("~E", 7), (1, 2, 5): ("~E", 8)}
            if tuple(lens) in simply:
                return IrreducibleType(*simply[tuple(lens)])
            return generic
        if odd == [4]:
            short = [a for a in arms if a[0] == [3]]
            long = [a for a in arms if a[0] != [3]]
            if len(short) >= 2 and len(long) <= 1:
                tail = long[0][0] if long else [4]
                if tail[-1] == 4 and all(m == 3 for m in tail[:-1]):
                    return IrreducibleType("~B", k - 1)
        return generic

    if len(branch) == 2 and not odd and all(deg[b] == 3 for b in branch):
        for b in branch:
            leaves = [a for a in arms_of[b] if len(a[0]) == 1 and deg[a[1]] == 1]
            if len(leaves) != 2:
                return generic
        return IrreducibleType("~D", k - 1)
    return generic


def _classify_path(seq: list, generic: IrreducibleType) -> IrreducibleType:
    k = len(seq) + 1
    special = [(i, m) for i, m in enumerate(seq) if m != 3]
    last = len(seq) - 1
    if not special:
        return IrreducibleType("A", k)
    if len(special) == 1:
        i, m = special[0]
        at_end = i in (0, last)
        if m == 4:
            if at_end:
                return IrreducibleType("B", k)
            if k == 4:
                return IrreducibleType("F", 4)
            if k == 5 and i in (1, 2):
                return IrreducibleType("~F", 4)
        elif m == 5 and at_end and k in (3, 4):
            return IrreducibleType("H", k)
        elif m == 6 and at_end and k == 3:
            return IrreducibleType("~G", 2)
        return generic
    if len(special) == 2 and all(m == 4 for _, m in special) \
            and {special[0][0], special[1][0]} == {0, last}:
        return IrreducibleType("~C", k - 1)
    return generic


def classify_component(d: DynkinDiagram) -> IrreducibleType:
    """Type of a connected Coxeter-Dynkin diagram.

    Examples
    --------
    >>> from coxrigid.graph import DynkinDiagram
    >>> classify_component(DynkinDiagram(("a", "b"), (("a", "b", 5),))).name
    'I2(5)'
    """
    if not d.is_connected():
        raise ValueError("Dynkin diagram is not connected")
    idx = {v: i for i, v in enumerate(d.vertices)}
    lab = {}
    for a, b, m in d.edges:
        i, j = sorted((idx[a], idx[b]))
        lab[(i, j)] = m
    return _classify_local(len(d.vertices), lab)


def classify_mask(g: CoxeterGraph, mask: int) -> IrreducibleType:
    """Type of the Dynkin-connected vertex set ``mask`` of ``g``."""
    idx = [i for i in range(g.n) if mask >> i & 1]
    M = g.mat
    lab = {}
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            m = M[idx[a]][idx[b]]
            if m != 2:
                lab[(a, b)] = m if m else INF
    return _classify_local(len(idx), lab)


def dynkin_component_masks(g: CoxeterGraph, mask: int | None = None) -> list[int]:
    if mask is None:
        mask = (1 << g.n) - 1
    return component_masks(g.dynkin_masks, mask)


# ---------------------------------------------------------------------------
# subset tables

class SubsetTable:
    """Memoised classification of the vertex subsets of one graph.

    ``spherical`` maps every spherical bitmask (including 0) to the
    sorted tuple of its irreducible types.
    """

    def __init__(self, g: CoxeterGraph):
        self.g = g
        self._comp: dict[int, IrreducibleType] = {}
        self.spherical = self._scan()

    def component_type(self, cmask: int) -> IrreducibleType:
        t = self._comp.get(cmask)
        if t is None:
            t = self._comp[cmask] = classify_mask(self.g, cmask)
        return t

    def types_of(self, mask: int) -> tuple[IrreducibleType, ...]:
        return tuple(sorted(self.component_type(c)
                            for c in component_masks(self.g.dynkin_masks, mask)))

    def _scan(self) -> dict[int, tuple]:
        n = self.g.n
        sph = {0: ()}
        for mask in range(1, 1 << n):
            # supersets of non-spherical sets are non-spherical
            rest, ok = mask, True
            while rest:
                b = rest & -rest
                rest ^= b
                if mask ^ b not in sph:
                    ok = False
                    break
            if not ok:
                continue
            types = self.types_of(mask)
            if all(t.is_finite for t in types):
                sph[mask] = types
        return sph

    @cached_property
    def maximal(self) -> list[int]:
        n = self.g.n
        out = []
        for mask in self.spherical:
            if all((mask | 1 << i) not in self.spherical
                   for i in range(n) if not mask >> i & 1):
                out.append(mask)
        return sorted(out, key=lambda m: (-bin(m).count("1"), _mask_key(m)))

    def is_spherical(self, mask: int) -> bool:
        return mask in self.spherical


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def subset_table(g: CoxeterGraph) -> SubsetTable:
    """Shared :class:`SubsetTable` of ``g`` (computed once per graph object)."""
    t = g.__dict__.get("_subset_table")
    if t is None:
        t = SubsetTable(g)
        g.__dict__["_subset_table"] = t
    return t


@dataclass(frozen=True)
class SphericalSubset:
    vertices: tuple[str, ...]
    types: tuple[IrreducibleType, ...]

    @property
    def order(self) -> int:
        return order_of_finite(self.types)


def is_spherical(g: CoxeterGraph, S: Iterable[str]) -> bool:
    """True when the parabolic subgroup on ``S`` is finite."""
    mask = g.mask_of(S)
    if "_subset_table" in g.__dict__:
        return g.__dict__["_subset_table"].is_spherical(mask)
    return all(classify_mask(g, c).is_finite for c in dynkin_component_masks(g, mask))


def spherical_subsets(g: CoxeterGraph) -> list[SphericalSubset]:
    """All spherical subsets, ``()`` first, by increasing size."""
    tab = subset_table(g)
    masks = sorted(tab.spherical, key=lambda m: (bin(m).count("1"), _mask_key(m)))
    return [SphericalSubset(g.names_of(m), tab.spherical[m]) for m in masks]


@dataclass(frozen=True)
class CFMaxEntry:
    vertices: tuple[str, ...]
    types: tuple[IrreducibleType, ...]
    order: int
    pseudorank: int

    @property
    def group_key(self) -> tuple[str, ...]:
        return group_key(self.types)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "types": [t.name for t in self.types],
                "order": self.order, "pseudorank": self.pseudorank}


@dataclass(frozen=True)
class CFMaxReport:
    """Maximal spherical subsets with their pairwise intersections.

    ``intersections[i][j]`` is ``None`` when the two subsets are disjoint,
    otherwise ``(vertices, types)`` of the intersection.
    """

    entries: tuple[CFMaxEntry, ...]
    intersections: tuple[tuple, ...]

    @property
    def rank_bound(self) -> int:
        """Sum of pseudo-ranks of the maximal finite subgroups."""
        return sum(e.pseudorank for e in self.entries)

    def type_multiset(self) -> list[str]:
        return sorted(format_types(e.types) for e in self.entries)

    def group_multiset(self) -> list[tuple[str, ...]]:
        return sorted(e.group_key for e in self.entries)

    def to_dict(self) -> dict:
        inter = [[None if x is None else {"vertices": list(x[0]), "types": [t.name for t in x[1]]}
                  for x in row] for row in self.intersections]
        return {"subsets": [e.to_dict() for e in self.entries],
                "intersections": inter, "rank_bound": self.rank_bound}


def cf_max(g: CoxeterGraph) -> CFMaxReport:
    """Maximal spherical subsets of ``g`` and their intersection pattern."""
    tab = subset_table(g)
    maxi = tab.maximal
    entries = tuple(CFMaxEntry(g.names_of(m), tab.spherical[m], order_of_finite(tab.spherical[m]),
                               pseudo_rank_finite(tab.spherical[m])) for m in maxi)
    rows = []
    for a in maxi:
        row = []
        for b in maxi:
            c = a & b
            row.append((g.names_of(c), tab.spherical[c]) if c else None)
        rows.append(tuple(row))
    return CFMaxReport(entries, tuple(rows))

