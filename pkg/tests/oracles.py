"""Reference computations that share no code with the library.

Each oracle is deliberately naive: brute force over permutations or label
assignments, or an explicit construction of the group.
"""
from __future__ import annotations

import itertools
import math

import numpy as np


def brute_force_classes(n: int, d: int, connected: bool = False) -> int:
    """Isomorphism classes of labelled graphs on exactly ``n`` vertices.

    Every assignment of ``{none, 2..d}`` to the vertex pairs is reduced to
    its lexicographically least image under all ``n!`` relabellings.
    """
    pairs = list(itertools.combinations(range(n), 2))
    options = (0,) + tuple(range(2, d + 1))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for labels in itertools.product(options, repeat=len(pairs)):
        M = [[0] * n for _ in range(n)]
        for (i, j), m in zip(pairs, labels):
            M[i][j] = M[j][i] = m
        if connected and not _connected(M):
            continue
        seen.add(min(tuple(M[p[i]][p[j]] for i, j in pairs) for p in perms))
    return len(seen)


def _connected(M) -> bool:
    n = len(M)
    if n <= 1:
        return True
    stack, seen = [0], {0}
    while stack:
        v = stack.pop()
        for w in range(n):
            if M[v][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def reflection_matrices(mat) -> list[np.ndarray]:
    """Geometric (Tits) representation; ``0`` in ``mat`` is a non-edge."""
    n = len(mat)
    B = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                B[i, j] = -1.0 if mat[i][j] == 0 else -math.cos(math.pi / mat[i][j])
    gens = []
    for i in range(n):
        S = np.eye(n)
        S[i, :] -= 2 * B[i, :]
        gens.append(S.T)
    return gens


def group_order(mat, cap: int = 20000) -> int | None:
    """Order of the group generated by the Tits reflections, or ``None``
    if the closure exceeds ``cap`` elements."""
    gens = reflection_matrices(mat)
    n = len(mat)
    key = lambda A: tuple(np.round(A, 6).ravel() + 0.0)
    I = np.eye(n)
    seen = {key(I)}
    frontier = [I]
    while frontier:
        nxt = []
        for A in frontier:
            for S in gens:
                B = A @ S
                k = key(B)
                if k not in seen:
                    seen.add(k)
                    if len(seen) > cap:
                        return None
                    nxt.append(B)
        frontier = nxt
    return len(seen)


def gram_kind(mat) -> str:
    """finite / affine / generic verdict for a connected Dynkin component,
    from the exact characteristic sign pattern of the cosine matrix."""
    n = len(mat)
    B = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                m = mat[i][j]
                B[i, j] = -1.0 if m == 0 else -math.cos(math.pi / m)
    ev = np.linalg.eigvalsh(B)
    if ev.min() > 1e-9:
        return "finite"
    if ev.min() > -1e-9 and np.sum(np.abs(ev) <= 1e-9) == 1:
        return "affine"
    return "generic"


def dynkin_blocks(mat) -> list[list[int]]:
    """Connected components of the Dynkin diagram (pairs with ``m != 2``)."""
    n = len(mat)
    left, out = set(range(n)), []
    while left:
        v = left.pop()
        comp, stack = [v], [v]
        while stack:
            x = stack.pop()
            for y in list(left):
                if mat[x][y] != 2:
                    left.discard(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def sub(mat, idx):
    return [[mat[i][j] for j in idx] for i in idx]


def chi_triangle_closed_form(p: int, q: int, r: int):
    from fractions import Fraction
    return (Fraction(1, p) + Fraction(1, q) + Fraction(1, r) - 1) / 2
