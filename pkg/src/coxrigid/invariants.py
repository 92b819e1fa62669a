"""Group invariants of Coxeter groups read off their defining graphs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .classification import (AFFINE, FINITE, IrreducibleType, cf_max, dynkin_component_masks,
                             group_key, order_of_finite, subset_table)
from .graph import CoxeterGraph, component_masks, induced_by_mask
from .topology import vcd as _vcd

ENDS_INFINITE = "inf"


@dataclass(frozen=True)
class Decomposition:
    """Product decomposition ``W = W_sph x W_aff x W_gen``.

    Built from the Dynkin components of the whole graph, so a
    disconnected graph (a free product) lands in the generic part unless
    it is the infinite dihedral group.
    """

    spherical: tuple[IrreducibleType, ...]
    affine: tuple[IrreducibleType, ...]
    generic: CoxeterGraph
    spherical_vertices: tuple[str, ...]
    affine_vertices: tuple[str, ...]
    generic_vertices: tuple[str, ...]
    free_product: bool = False
    components: tuple["Decomposition", ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        out = {"spherical": [t.name for t in self.spherical],
               "affine": [t.name for t in self.affine],
               "generic_vertices": list(self.generic_vertices),
               "free_product": self.free_product}
        if self.free_product:
            out["components"] = [c.to_dict() for c in self.components]
        return out


def _decompose(g: CoxeterGraph, with_components: bool) -> Decomposition:
    tab = subset_table(g)
    sph, aff = [], []
    sv = av = gv = 0
    for c in dynkin_component_masks(g):
        t = tab.component_type(c)
        if t.kind == FINITE:
            sph.append(t)
            sv |= c
        elif t.kind == AFFINE:
            aff.append(t)
            av |= c
        else:
            gv |= c
    comps = component_masks(g.adj_masks, (1 << g.n) - 1)
    free = len(comps) > 1
    parts = ()
    if free and with_components:
        parts = tuple(_decompose(induced_by_mask(g, c), False) for c in comps)
    return Decomposition(tuple(sorted(sph)), tuple(sorted(aff)), induced_by_mask(g, gv),
                         g.names_of(sv), g.names_of(av), g.names_of(gv), free, parts)


def decompose(g: CoxeterGraph) -> Decomposition:
    """Split ``W_g`` into spherical, affine and generic parts.

    Examples
    --------
    >>> from coxrigid.graph import triangle
    >>> [t.name for t in decompose(triangle(3, 3, 3)).affine]
    ['~A2']
    """
    return _decompose(g, True)


def _full(g):
    return (1 << g.n) - 1


def is_FA(g: CoxeterGraph) -> bool:
    """Property FA holds exactly for complete graphs."""
    return all(g.adj_masks[i] | 1 << i == _full(g) for i in range(g.n))


def maximal_cliques(g: CoxeterGraph) -> list[int]:
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    adj = g.adj_masks
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(R)
            return
        u = (P | X).bit_length() - 1
        cand = P & ~adj[u]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            bk(R | b, P & adj[v], X & adj[v])
            P &= ~b
            X |= b

    if g.n:
        bk(0, _full(g), 0)
    return sorted(out)


def is_FC(g: CoxeterGraph) -> bool:
    """Every clique spans a finite parabolic subgroup."""
    sph = subset_table(g).spherical
    return all(c in sph for c in maximal_cliques(g))


def is_chordal(g: CoxeterGraph) -> bool:
    """Every cycle of length at least 4 has a chord."""
    adj = list(g.adj_masks)
    alive = _full(g)
    while alive:
        for v in range(g.n):
            if not alive >> v & 1:
                continue
            nb = adj[v] & alive
            if all((adj[w] | 1 << w) & nb == nb for w in range(g.n) if nb >> w & 1):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def _affine_rank3(g: CoxeterGraph) -> int | None:
    tab = subset_table(g)
    for mask in range(1, 1 << g.n):
        if bin(mask).count("1") < 3:
            continue
        comps = component_masks(g.dynkin_masks, mask)
        if len(comps) == 1 and tab.component_type(mask).kind == AFFINE:
            return mask
    return None


def _commuting_infinite(g: CoxeterGraph) -> tuple[int, int] | None:
    sph = subset_table(g).spherical
    two = g.two_masks
    for S in range(1, 1 << g.n):
        if S in sph:
            continue
        C = _full(g) & ~S
        rest = S
        while rest and C:
            b = rest & -rest
            rest ^= b
            C &= two[b.bit_length() - 1]
        if C and C not in sph:
            return S, C
    return None


def is_hyperbolic(g: CoxeterGraph) -> bool:
    """Gromov hyperbolicity via Moussong's criterion."""
    return _affine_rank3(g) is None and _commuting_infinite(g) is None


def is_finite(g: CoxeterGraph) -> bool:
    return _full(g) in subset_table(g).spherical


def _is_virtually_Z(d: Decomposition) -> bool:
    return len(d.affine) == 1 and d.affine[0].family == "~A" and d.affine[0].n == 1 \
        and not d.generic_vertices


def ends(g: CoxeterGraph):
    """Number of ends: ``0``, ``1``, ``2`` or ``"inf"``.

    Order of tests: finite, virtually infinite cyclic, a spherical
    subset (possibly empty) whose removal disconnects the graph, else one.
    """
    if is_finite(g):
        return 0
    if _is_virtually_Z(decompose(g)):
        return 2
    if separating_spherical(g) is not None:
        return ENDS_INFINITE
    return 1


def separating_spherical(g: CoxeterGraph) -> int | None:
    """A spherical bitmask ``T`` with ``V - T`` disconnected, if any."""
    full = _full(g)
    for T in sorted(subset_table(g).spherical, key=lambda m: bin(m).count("1")):
        rest = full & ~T
        if rest and len(component_masks(g.adj_masks, rest)) > 1:
            return T
    return None


def is_virtually_free(g: CoxeterGraph) -> bool:
    return is_chordal(g) and is_FC(g)


def _induced_cycle(g: CoxeterGraph, mask: int) -> bool:
    k = bin(mask).count("1")
    if k < 3:
        return False
    for v in range(g.n):
        if mask >> v & 1 and bin(g.adj_masks[v] & mask).count("1") != 2:
            return False
    return len(component_masks(g.adj_masks, mask)) == 1


def virtually_surface_split(g: CoxeterGraph) -> tuple[int, int] | None:
    """``(V_fin, V_cyc)`` realising a virtually surface splitting, if any."""
    tab = subset_table(g)
    full = _full(g)
    two = g.two_masks
    for cyc in range(1, 1 << g.n):
        if not _induced_cycle(g, cyc) or cyc in tab.spherical:
            continue
        fin = full & ~cyc
        if fin not in tab.spherical:
            continue
        if all(two[v] & cyc == cyc for v in range(g.n) if fin >> v & 1):
            return fin, cyc
    return None


def is_virtually_surface(g: CoxeterGraph) -> bool:
    return virtually_surface_split(g) is not None


def is_virtually_abelian(g: CoxeterGraph) -> bool:
    """``W`` is a finite group times a product of affine groups."""
    return not decompose(g).generic_vertices


@dataclass(frozen=True)
class LabelFlags:
    odd: bool
    strongly_even: bool
    labels_div_4: bool
    extra_large: bool
    complete_equal: int | None

    def to_dict(self) -> dict:
        return {"odd": self.odd, "strongly_even": self.strongly_even,
                "labels_div_4": self.labels_div_4, "extra_large": self.extra_large,
                "complete_equal": self.complete_equal}


def label_flags(g: CoxeterGraph) -> LabelFlags:
    labels = [m for _, _, m in g.edge_index_list]
    ce = None
    if g.n >= 2 and is_FA(g) and len(set(labels)) == 1:
        ce = labels[0]
    return LabelFlags(
        odd=all(m % 2 for m in labels),
        strongly_even=all(m == 2 or m % 4 == 0 for m in labels),
        labels_div_4=all(m % 4 == 0 for m in labels),
        extra_large=all(m >= 4 for m in labels),
        complete_equal=ce,
    )


class _UnionFind:
    def __init__(self, items):
        self.p = {x: x for x in items}

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        self.p[self.find(a)] = self.find(b)

    def classes(self):
        return len({self.find(x) for x in self.p})


@dataclass(frozen=True)
class SchurData:
    """Howlett's data; the multiplier is ``Z_2^multiplier_rank``."""

    A2: tuple[tuple[str, str], ...]
    nu: int
    mu: int
    xi: int
    n_vertices: int

    @property
    def multiplier_rank(self) -> int:
        return self.nu + self.mu + self.xi - self.n_vertices

    def to_dict(self) -> dict:
        return {"nu": self.nu, "mu": self.mu, "xi": self.xi,
                "multiplier_rank": self.multiplier_rank}


def schur_data(g: CoxeterGraph) -> SchurData:
    M = g.mat
    A2 = [(i, j) for i, j, m in g.edge_index_list if m == 2]
    uf = _UnionFind(A2)
    by_vertex: dict[int, list] = {}
    for e in A2:
        for v in e:
            by_vertex.setdefault(v, []).append(e)
    for v, es in by_vertex.items():
        for a in range(len(es)):
            w1 = es[a][0] if es[a][1] == v else es[a][1]
            for b in range(a + 1, len(es)):
                w2 = es[b][0] if es[b][1] == v else es[b][1]
                if M[w1][w2] % 2 == 1:
                    uf.union(es[a], es[b])
    odd = _UnionFind(range(g.n))
    for i, j, m in g.edge_index_list:
        if m % 2:
            odd.union(i, j)
    V = g.vertices
    return SchurData(A2=tuple((V[i], V[j]) for i, j in A2), nu=uf.classes(),
                     mu=sum(1 for *_, m in g.edge_index_list if m >= 3),
                     xi=odd.classes(), n_vertices=g.n)


def euler_characteristic(g: CoxeterGraph) -> Fraction:
    """Rational Euler characteristic: sum of ``(-1)^|T| / |W_T|`` over spherical ``T``."""
    tab = subset_table(g)
    return sum((Fraction(-1 if bin(m).count("1") % 2 else 1, order_of_finite(t))
                for m, t in tab.spherical.items()), Fraction(0))


def two_term_chi(g: CoxeterGraph) -> Fraction:
    """``1 - |V|/2 + sum_e 1/(2 m(e))``; equals the Euler characteristic when
    no spherical subset has three or more vertices."""
    return 1 - Fraction(g.n, 2) + sum((Fraction(1, 2 * m) for *_, m in g.edge_index_list),
                                      Fraction(0))


def cycle_rank(g: CoxeterGraph) -> int:
    """First Betti number ``|E| - |V| + #components`` of the graph."""
    comps = len(component_masks(g.adj_masks, _full(g))) if g.n else 0
    return len(g.edge_index_list) - g.n + comps


# ---------------------------------------------------------------------------
# invariant vector

GENERAL, CONDITIONAL, ISO_ONLY, PRESENTATION = "general", "conditional", "iso-invariant-only", "presentation"

# (field, status, citation); order is fixed for diffing
FIELDS = (
    ("FA", GENERAL, "property FA, complete graphs"),
    ("ends", GENERAL, "number of ends"),
    ("hyperbolic", GENERAL, "Gromov hyperbolicity"),
    ("virtually_free", GENERAL, "virtually free"),
    ("virtually_surface", GENERAL, "virtually surface"),
    ("FC", GENERAL, "FC type"),
    ("odd", GENERAL, "odd labels"),
    ("chi", GENERAL, "Euler characteristic"),
    ("schur_rank", GENERAL, "Schur multiplier rank (Howlett)"),
    ("xi", GENERAL, "abelianisation rank"),
    ("connected", GENERAL, "free splittings"),
    ("spherical_part", GENERAL, "spherical part up to isomorphism"),
    ("affine_part", GENERAL, "affine part"),
    ("virtually_abelian", GENERAL, "virtually abelian"),
    ("cf_max", CONDITIONAL, "CF_max multiset; both hyperbolic of FC type, or both connected extra large"),
    ("odd_cycle_rank", CONDITIONAL, "cycle rank of an odd graph; both connected odd with one cycle rank <= 1"),
    ("vcd", ISO_ONLY, "virtual cohomological dimension"),
    ("components", ISO_ONLY, "number of free factors"),
    ("cf_max_intersections", PRESENTATION, "intersection pattern of maximal spherical subsets (depends on representatives)"),
    ("rank", PRESENTATION, "number of generators"),
    ("strongly_even", PRESENTATION, "labels in {2} u 4N"),
    ("labels_div_4", PRESENTATION, "labels in 4N"),
    ("extra_large", PRESENTATION, "labels >= 4"),
    ("complete_equal", PRESENTATION, "complete with a single label"),
    ("spherical_types", PRESENTATION, "spherical Dynkin types"),
)
STATUS = {name: status for name, status, _ in FIELDS}
CITATION = {name: cite for name, _, cite in FIELDS}


@dataclass(frozen=True)
class InvariantVector:
    """Invariants of one graph together with the flags that decide when a
    conditional field may be compared."""

    values: dict
    hyperbolic_fc: bool
    connected_extra_large: bool
    connected_odd: bool

    def __getitem__(self, key):
        return self.values[key]

    def condition_holds(self, name: str, other: "InvariantVector") -> bool:
        if name == "cf_max":
            return (self.hyperbolic_fc and other.hyperbolic_fc) or \
                (self.connected_extra_large and other.connected_extra_large)
        if name == "odd_cycle_rank":
            return self.connected_odd and other.connected_odd and \
                min(self["odd_cycle_rank"], other["odd_cycle_rank"]) <= 1
        return True

    def to_dict(self) -> dict:
        return {name: {"value": _jsonable(self.values[name]), "profinite_status": status}
                for name, status, _ in FIELDS}

    def flat(self) -> dict:
        return {name: _jsonable(self.values[name]) for name, *_ in FIELDS}


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def invariant_vector(g: CoxeterGraph) -> InvariantVector:
    """All implemented invariants of ``W_g``."""
    d = decompose(g)
    flags = label_flags(g)
    cf = cf_max(g)
    conn = len(component_masks(g.adj_masks, _full(g))) == 1 if g.n else False
    hyp = is_hyperbolic(g)
    fc = is_FC(g)
    keys = [e.group_key for e in cf.entries]
    inter = []
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            x = cf.intersections[i][j]
            inter.append((tuple(sorted((keys[i], keys[j]))), group_key(x[1]) if x else ()))
    e = ends(g)
    values = {
        "FA": is_FA(g),
        "ends": e,
        "hyperbolic": hyp,
        "virtually_free": is_virtually_free(g),
        "virtually_surface": is_virtually_surface(g),
        "FC": fc,
        "odd": flags.odd,
        "chi": euler_characteristic(g),
        "schur_rank": schur_data(g).multiplier_rank,
        "xi": schur_data(g).xi,
        "connected": conn,
        "spherical_part": group_key(d.spherical),
        "affine_part": tuple(t.name for t in d.affine),
        "virtually_abelian": not d.generic_vertices,
        "cf_max": tuple(cf.group_multiset()),
        "odd_cycle_rank": cycle_rank(g) if flags.odd else None,
        "vcd": _vcd(g),
        "components": len(component_masks(g.adj_masks, _full(g))),
        "cf_max_intersections": tuple(sorted(inter)),
        "rank": g.n,
        "strongly_even": flags.strongly_even,
        "labels_div_4": flags.labels_div_4,
        "extra_large": flags.extra_large,
        "complete_equal": flags.complete_equal,
        "spherical_types": tuple(t.name for t in d.spherical),
    }
    return InvariantVector(values, hyperbolic_fc=hyp and fc,
                           connected_extra_large=conn and flags.extra_large,
                           connected_odd=conn and flags.odd)
