"""Cosine-form oracle for finite / affine / generic verdicts.

The bilinear form of the geometric representation has entries
``-cos(pi/m)`` (``-1`` for ``m = inf``). A connected diagram is finite
exactly when the form is positive definite and affine exactly when it is
positive semidefinite of corank one.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classification import AFFINE, FINITE, GENERIC, classify_mask, dynkin_component_masks
from .graph import CoxeterGraph, induced_by_mask

DEFAULT_TOLERANCE = 1e-9


class OracleDisagreement(RuntimeError):
    """The structural classifier and the Gram oracle disagree."""


@dataclass(frozen=True)
class Signature:
    """``kind`` is ``"positive_definite"``, ``"positive_semidefinite"`` or ``"indefinite"``."""

    kind: str
    corank: int = 0

    @property
    def verdict(self) -> str:
        if self.kind == "positive_definite":
            return FINITE
        if self.kind == "positive_semidefinite" and self.corank == 1:
            return AFFINE
        return GENERIC


def gram_matrix(g: CoxeterGraph) -> np.ndarray:
    """Cosine matrix of ``g``; non-edges give ``-1``."""
    M = np.array(g.mat, dtype=float).reshape(g.n, g.n)
    B = np.full((g.n, g.n), -1.0)
    edge = M > 0
    B[edge] = -np.cos(np.pi / M[edge])
    np.fill_diagonal(B, 1.0)
    return B


def signature_class(B: np.ndarray, eps: float = DEFAULT_TOLERANCE) -> Signature:
    ev = np.linalg.eigvalsh(B)
    if np.any(ev < -eps):
        return Signature("indefinite")
    corank = int(np.sum(np.abs(ev) < eps))
    if corank == 0:
        return Signature("positive_definite")
    return Signature("positive_semidefinite", corank)


def classify_via_gram(g: CoxeterGraph, eps: float = DEFAULT_TOLERANCE) -> list[tuple[tuple[str, ...], str]]:
    """Verdict per Dynkin component, as ``(vertex names, verdict)`` pairs."""
    out = []
    for c in dynkin_component_masks(g):
        sig = signature_class(gram_matrix(induced_by_mask(g, c)), eps)
        out.append((g.names_of(c), sig.verdict))
    return out


def cross_check(g: CoxeterGraph, eps: float = DEFAULT_TOLERANCE) -> None:
    """Raise :class:`OracleDisagreement` unless both classifiers agree on ``g``."""
    for c in dynkin_component_masks(g):
        t = classify_mask(g, c)
        sig = signature_class(gram_matrix(induced_by_mask(g, c)), eps)
        if t.kind != sig.verdict:
            raise OracleDisagreement(
                f"component {g.names_of(c)}: catalogue says {t.name} ({t.kind}), "
                f"Gram form says {sig.kind} (corank {sig.corank})")
