"""Affine matrix representation of the structure group and the span of its image.

``psi(g)`` is the ``(n+1) x (n+1)`` integer matrix with the permutation
matrix of ``phi(g)`` in the upper-left block, ``pi(g)`` in the last column and
``(0, ..., 0, 1)`` as bottom row. The linear span of all ``psi(g)`` is finite
dimensional; it is spanned by the images of the frozen elements together with
one simple representative per element of the IYB group.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import perm as P
from .errors import IndexOutOfRange, InternalInconsistency
from .group import (
    DEFAULT_MAX_GERM,
    CosetTables,
    Germ,
    GroupElement,
    build_germ,
    coset_tables,
)
from .linalg import rank_and_basis
from .solution import SolutionTable, frozen_words


def permutation_matrix(p: P.Perm) -> np.ndarray:
    """Column j carries its 1 in row ``p(j)``."""
    n = len(p)
    A = np.zeros((n, n), dtype=np.int64)
    A[list(p), list(range(n))] = 1
    return A


def psi(G: Germ, g: GroupElement) -> np.ndarray:
    n = G.n
    M = np.zeros((n + 1, n + 1), dtype=np.int64)
    M[:n, :n] = permutation_matrix(G.phi(g))
    M[:n, n] = g.vec
    M[n, n] = 1
    return M


def is_affine_matrix(M: np.ndarray) -> bool:
    M = np.asarray(M)
    k = M.shape[0]
    if M.shape != (k, k) or k < 2:
        return False
    A = M[:-1, :-1]
    bottom_ok = np.array_equal(M[-1], np.eye(k, dtype=M.dtype)[-1])
    perm_ok = (
        np.isin(A, (0, 1)).all()
        and (A.sum(axis=0) == 1).all()
        and (A.sum(axis=1) == 1).all()
    )
    return bool(bottom_ok and perm_ok)


def e_matrix(n: int, k: int) -> np.ndarray:
    """The matrix unit at row ``k``, last column (0-based ``k``)."""
    if not 0 <= k < n:
        raise IndexOutOfRange(f"k = {k} outside 0..{n - 1}")
    E = np.zeros((n + 1, n + 1), dtype=np.int64)
    E[k, n] = 1
    return E


def decompose(G: Germ, g: GroupElement) -> tuple[GroupElement, tuple[int, ...]]:
    """Split ``g`` as ``g_N * s`` with ``s`` simple and ``g_N`` a product of frozen elements.

    Returns ``s`` and the exponents ``alpha`` with
    ``psi(g) = psi(s) + m * sum_i alpha_i E_i``.
    """
    s = GroupElement(G.residue(g.vec))
    alpha = tuple((a - b) // G.m for a, b in zip(g.vec, s.vec))
    rebuilt = psi(G, s) + G.m * sum(
        (a * e_matrix(G.n, i) for i, a in enumerate(alpha)), np.zeros_like(psi(G, s))
    )
    if not np.array_equal(rebuilt, psi(G, g)):
        raise InternalInconsistency(f"reconstruction fails for {g.vec}")
    return s, alpha


@dataclass(frozen=True)
class LabeledMatrix:
    label: str
    word: tuple[int, ...]
    vector: tuple[int, ...]
    matrix: np.ndarray = field(compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "word": P.one_based(self.word),
            "vector": list(self.vector),
            "matrix": self.matrix.tolist(),
        }


def _word_str(word: Sequence[int]) -> str:
    return "".join(f"x{x + 1}" for x in word) or "1"


def spanning_set(G: Germ, C: CosetTables) -> list[LabeledMatrix]:
    """``psi(theta_1..theta_n)`` followed by ``psi(v)`` for ``v`` in ``T_K``."""
    out = []
    for k, w in enumerate(frozen_words(G.solution, G.m)):
        g = G.from_word(w)
        out.append(LabeledMatrix(f"theta{k + 1}={_word_str(w)}", w, g.vec, psi(G, g)))
    for q, v in enumerate(C.T_K):
        w = G.witness[v.vec]
        out.append(LabeledMatrix(f"v{q + 1}={_word_str(w)}", w, v.vec, psi(G, v)))
    return out


@dataclass(frozen=True)
class DimensionReport:
    n: int
    m: int
    iyb_order: int
    spanning_labels: tuple[str, ...]
    basis_indices: tuple[int, ...]
    dimension: int
    simples_only_rank: int
    ball_rank: int | None = None

    @property
    def bound(self) -> int:
        return self.n + self.iyb_order

    @property
    def basis_labels(self) -> tuple[str, ...]:
        return tuple(self.spanning_labels[i] for i in self.basis_indices)

    @property
    def simples_span(self) -> bool:
        return self.simples_only_rank == self.dimension

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "iyb_order": self.iyb_order,
            "bound": self.bound,
            "dimension": self.dimension,
            "spanning_labels": list(self.spanning_labels),
            "basis_indices": list(self.basis_indices),
            "basis_labels": list(self.basis_labels),
            "simples_only_rank": self.simples_only_rank,
            "simples_span": self.simples_span,
            "ball_rank": self.ball_rank,
        }


def dimension_report(
    S: SolutionTable, max_germ: int = DEFAULT_MAX_GERM, germ: Germ | None = None
) -> DimensionReport:
    G = germ if germ is not None else build_germ(S, max_germ)
    C = coset_tables(G)
    span = spanning_set(G, C)
    dim, kept = rank_and_basis([lm.matrix for lm in span])
    simples_rank, _ = rank_and_basis([psi(G, s) for s in G.simples()])
    if dim > G.n + C.iyb_order:
        raise InternalInconsistency(f"dimension {dim} exceeds n + |IYB| = {G.n + C.iyb_order}")
    if simples_rank > dim:
        raise InternalInconsistency("simple images span more than the spanning set")
    return DimensionReport(
        n=G.n,
        m=G.m,
        iyb_order=C.iyb_order,
        spanning_labels=tuple(lm.label for lm in span),
        basis_indices=tuple(kept),
        dimension=dim,
        simples_only_rank=simples_rank,
    )
