"""scikit-learn style front end.

:class:`GarsideStructure` is fitted on one solution and then maps words in the
generators to the flattened affine matrices ``psi(word)``, so it can sit at the
head of a :class:`~sklearn.pipeline.Pipeline`.
"""

from __future__ import annotations

import numbers
from collections.abc import Mapping
from os import PathLike

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .group import DEFAULT_MAX_GERM, GroupElement, build_germ, coset_tables
from .linalg import EchelonBasis
from .rep import dimension_report, psi, spanning_set
from .solution import SolutionTable, load_solution, profile


def _as_solution(X, index_base: int) -> SolutionTable:
    if isinstance(X, SolutionTable):
        return X
    if isinstance(X, (Mapping, str, bytes, PathLike)):
        return load_solution(X)
    sigma = check_array(X, dtype=np.int64, ensure_min_samples=1, ensure_min_features=1)
    if sigma.shape[0] != sigma.shape[1]:
        raise ValueError(f"sigma table must be square, got shape {sigma.shape}")
    return SolutionTable.from_tables(sigma - index_base)


def _check_words(words, n: int, index_base: int) -> list[tuple[int, ...]]:
    if isinstance(words, np.ndarray) and words.ndim == 2:
        words = words.tolist()
    out = []
    for w in words:
        if isinstance(w, numbers.Integral):
            w = [w]
        w = tuple(int(x) - index_base for x in w)
        if any(not 0 <= x < n for x in w):
            raise ValueError(f"word {[x + index_base for x in w]} uses letters outside the generators")
        out.append(w)
    return out


class GarsideStructure(TransformerMixin, BaseEstimator):
    """Germ, coset tables and matrix-span dimension of a solution's structure group.

    Parameters
    ----------
    max_germ : int, default=10**6
        Refuse to build a germ with more than this many simples.
    index_base : {0, 1}, default=1
        Index base of sigma tables and of words passed to ``fit``/``transform``.

    Attributes
    ----------
    solution_ : SolutionTable
    profile_ : SolutionProfile
    germ_ : Germ
    coset_tables_ : CosetTables
    class_ : int
    iyb_order_ : int
    report_ : DimensionReport
    dimension_ : int
    basis_ : ndarray of shape (dimension_, (n+1)**2)
        Flattened basis matrices chosen from the spanning set.
    n_features_out_ : int
    """

    def __init__(self, max_germ: int = DEFAULT_MAX_GERM, index_base: int = 1):
        self.max_germ = max_germ
        self.index_base = index_base

    def fit(self, X, y=None):
        """Analyse the solution ``X``.

        ``X`` may be a :class:`SolutionTable`, a parsed or raw JSON solution,
        a path to a solution file, or an ``(n, n)`` array of sigma rows.
        """
        if self.index_base not in (0, 1):
            raise ValueError(f"index_base must be 0 or 1, got {self.index_base!r}")
        if not isinstance(self.max_germ, numbers.Integral) or self.max_germ < 1:
            raise ValueError(f"max_germ must be a positive integer, got {self.max_germ!r}")
        S = _as_solution(X, self.index_base)
        self.solution_ = S
        self.profile_ = profile(S)
        self.germ_ = build_germ(S, self.max_germ)
        self.coset_tables_ = coset_tables(self.germ_)
        self.class_ = self.germ_.m
        self.iyb_order_ = self.coset_tables_.iyb_order
        self.report_ = dimension_report(S, germ=self.germ_)
        self.dimension_ = self.report_.dimension
        span = spanning_set(self.germ_, self.coset_tables_)
        self.basis_ = np.stack([span[i].matrix.ravel() for i in self.report_.basis_indices])
        self.n_features_out_ = (S.n + 1) ** 2
        return self

    def _elements(self, words) -> list[GroupElement]:
        check_is_fitted(self, "germ_")
        G = self.germ_
        return [G.from_word(w) for w in _check_words(words, G.n, self.index_base)]

    def transform(self, X):
        """Flattened ``psi(w)`` for each word ``w`` in ``X``; shape ``(len(X), (n+1)**2)``."""
        elements = self._elements(X)
        k = self.n_features_out_
        if not elements:
            return np.zeros((0, k), dtype=np.int64)
        return np.stack([psi(self.germ_, g).ravel() for g in elements])

    def cocycle(self, X):
        """Cocycle vectors ``pi(w)``, shape ``(len(X), n)``."""
        elements = self._elements(X)
        return np.array([g.vec for g in elements], dtype=np.int64).reshape(len(elements), self.germ_.n)

    def inverse_transform(self, X):
        """Recover cocycle vectors from flattened affine matrices."""
        check_is_fitted(self, "germ_")
        n = self.germ_.n
        X = check_array(X, dtype=np.int64)
        if X.shape[1] != self.n_features_out_:
            raise ValueError(f"expected {self.n_features_out_} columns, got {X.shape[1]}")
        return X.reshape(-1, n + 1, n + 1)[:, :n, n]

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "germ_")
        k = self.germ_.n + 1
        b = self.index_base
        return np.array([f"psi[{i + b},{j + b}]" for i in range(k) for j in range(k)], dtype=object)

    def in_span(self, matrix) -> bool:
        """Whether an ``(n+1) x (n+1)`` matrix lies in the span of the image."""
        check_is_fitted(self, "basis_")
        basis = EchelonBasis(self.n_features_out_)
        for row in self.basis_:
            basis.add(row.tolist())
        return basis.contains(np.asarray(matrix, dtype=object).ravel().tolist())

    def phi_of(self, word) -> list[int]:
        """``phi`` of a single word, in the estimator's index base."""
        (g,) = self._elements([word])
        return [i + self.index_base for i in self.germ_.phi(g)]
