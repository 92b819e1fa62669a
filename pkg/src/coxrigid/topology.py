"""Nerves of Coxeter systems and the virtual cohomological dimension.

The nerve has a ``k``-simplex for each spherical subset of size ``k+1``.
Reduced cohomology with integer coefficients comes from the augmented
cochain complex, reduced with an integer Smith normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .classification import subset_table
from .graph import CoxeterGraph


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex.

    Faces are stored as sorted tuples of vertex names and are closed under
    taking nonempty subsets. The empty complex has no faces.
    """

    vertices: tuple[str, ...]
    faces: frozenset = field(default_factory=frozenset)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def is_closed(self) -> bool:
        for f in self.faces:
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                if sub and sub not in self.faces:
                    return False
        return True


@dataclass(frozen=True)
class CohomologyProfile:
    """Reduced integral cohomology.

    ``groups[n] = (rank, torsion)`` for ``n >= 0``. ``empty`` flags the
    empty complex, whose only nonzero group is in degree ``-1``.
    """

    groups: tuple[tuple[int, tuple[int, ...]], ...]
    empty: bool = False

    def nonzero(self, n: int) -> bool:
        if n == -1:
            return self.empty
        if 0 <= n < len(self.groups):
            r, t = self.groups[n]
            return r > 0 or bool(t)
        return False

    @property
    def top_degree(self) -> int | None:
        """Largest degree with a nonzero group, ``None`` if acyclic."""
        if self.empty:
            return -1
        for n in range(len(self.groups) - 1, -1, -1):
            if self.nonzero(n):
                return n
        return None

    def to_dict(self) -> dict:
        return {"empty": self.empty,
                "degrees": {str(n): {"rank": r, "torsion": list(t)}
                            for n, (r, t) in enumerate(self.groups)}}


def smith_invariants(mat: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix.

    Plain elimination with arbitrary-precision integers; the returned
    diagonal ``d_1 | d_2 | ...`` has positive entries.
    """
    A = [list(r) for r in mat]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
                    if abs(A[i][j]) == 1:
                        break
            if piv and abs(A[piv[0]][piv[1]]) == 1:
                break
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, cols):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for r in A[t:]:
                            r[j] -= q * r[t]
                    if A[t][j]:
                        done = False
            if done:
                # divisibility condition on the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                for j in range(t, cols):
                    A[t][j] += A[bad[0]][j]
                continue
            # move the smallest remainder into the pivot
            best = min(((abs(A[i][t]), i, t) for i in range(t + 1, rows) if A[i][t]),
                       default=None)
            best2 = min(((abs(A[t][j]), t, j) for j in range(t + 1, cols) if A[t][j]),
                        default=None)
            cand = min(x for x in (best, best2) if x is not None)
            _, i, j = cand
            if j == t:
                A[t], A[i] = A[i], A[t]
            else:
                for r in A:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _faces_by_dim(faces: Iterable[tuple]) -> list[list[tuple]]:
    by = {}
    for f in faces:
        by.setdefault(len(f) - 1, []).append(f)
    top = max(by, default=-1)
    return [sorted(by.get(k, [])) for k in range(top + 1)]


def _coboundary(lower: list[tuple], upper: list[tuple]) -> list[list[int]]:
    pos = {f: i for i, f in enumerate(lower)}
    D = [[0] * len(lower) for _ in upper]
    for r, s in enumerate(upper):
        for i in range(len(s)):
            D[r][pos[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
    return D


@lru_cache(maxsize=200000)
def _cohomology_of(faces: frozenset) -> CohomologyProfile:
    if not faces:
        return CohomologyProfile((), empty=True)
    dims = _faces_by_dim(faces)
    sizes = [len(x) for x in dims]
    # invariant factors of delta^{k-1}: C^{k-1} -> C^k, for k = 0..top
    inv = [[1]]  # augmentation Z -> C^0 is a split injection
    for k in range(1, len(dims)):
        inv.append(smith_invariants(_coboundary(dims[k - 1], dims[k])))
    inv.append([])
    groups = []
    for k in range(len(dims)):
        rank_in = len(inv[k])
        rank_out = len(inv[k + 1])
        free = sizes[k] - rank_out - rank_in
        tors = tuple(d for d in inv[k] if d > 1)
        groups.append((free, tors))
    return CohomologyProfile(tuple(groups))


def reduced_cohomology(K: SimplicialComplex) -> CohomologyProfile:
    """Reduced cohomology ``H~^n(K; Z)`` of a simplicial complex."""
    order = {v: i for i, v in enumerate(K.vertices)}
    faces = frozenset(tuple(sorted(order[v] for v in f)) for f in K.faces)
    return _cohomology_of(faces)


def _mask_faces(masks: Iterable[int]) -> frozenset:
    out = []
    for m in masks:
        out.append(tuple(i for i in range(m.bit_length()) if m >> i & 1))
    return frozenset(out)


def nerve(g: CoxeterGraph) -> SimplicialComplex:
    """Simplicial complex of nonempty spherical subsets of ``g``."""
    tab = subset_table(g)
    faces = frozenset(g.names_of(m) for m in tab.spherical if m)
    return SimplicialComplex(g.vertices, faces)


def vcd(g: CoxeterGraph) -> int:
    """Virtual cohomological dimension by Davis's formula.

    For each spherical ``T`` the nerve of the complement ``V - T``
    contributes ``1 + top`` where ``top`` is its top nonzero reduced
    cohomology degree (``-1`` for the empty complex).
    """
    tab = subset_table(g)
    best = 0
    sph = [m for m in tab.spherical if m]
    for T in tab.spherical:
        faces = _mask_faces(m for m in sph if not m & T)
        top = _cohomology_of(faces).top_degree
        if top is not None:
            best = max(best, top + 1)
    return best
