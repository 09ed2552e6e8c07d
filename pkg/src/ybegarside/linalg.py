"""Exact rational linear algebra on small dense matrices.

Entries are :class:`fractions.Fraction`; nothing here touches floating point.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

import numpy as np

from .errors import ShapeMismatch


class RationalMatrix:
    """Immutable dense matrix of :class:`~fractions.Fraction` entries."""

    __slots__ = ("_rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        widths = {len(r) for r in self._rows}
        if len(widths) > 1:
            raise ShapeMismatch(f"ragged rows: widths {sorted(widths)}")
        self.shape = (len(self._rows), widths.pop() if widths else 0)

    @classmethod
    def from_array(cls, a) -> "RationalMatrix":
        return cls(np.asarray(a).tolist())

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RationalMatrix({[[str(v) for v in r] for r in self._rows]})"

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def flatten(self) -> tuple[Fraction, ...]:
        return tuple(v for r in self._rows for v in r)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return RationalMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix([c * v for v in r] for r in self._rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape[1] != other.shape[0]:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other._rows))
        return RationalMatrix(
            [sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows
        )

    def rank(self) -> int:
        basis = EchelonBasis(self.shape[1])
        for r in self._rows:
            basis.add(r)
        return basis.rank


class EchelonBasis:
    """Incrementally maintained reduced row echelon form.

    ``add`` reduces a vector against the current pivots and keeps it only if
    a nonzero remainder is left, so the rank after a scan is independent of
    how the kept vectors are scaled.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.width:
            raise ShapeMismatch(f"vector of length {len(vec)}, expected {self.width}")
        v = [Fraction(x) for x in vec]
        for col, row in self.pivots.items():
            c = v[col]
            if c:
                for j, r in enumerate(row):
                    if r:
                        v[j] -= c * r
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence) -> bool:
        v = self.reduce(vec)
        col = next((j for j, x in enumerate(v) if x), None)
        if col is None:
            return False
        lead = v[col]
        v = [x / lead for x in v]
        for row in self.pivots.values():
            c = row[col]
            if c:
                for j, x in enumerate(v):
                    if x:
                        row[j] -= c * x
        self.pivots[col] = v
        return True


def rank_and_basis(mats: Sequence) -> tuple[int, list[int]]:
    """Greedy exact rank: keep each matrix that enlarges the span so far.

    Matrices are flattened row-major; the kept indices depend only on the
    input order.
    """
    if not len(mats):
        return 0, []
    shapes = {np.shape(m) for m in mats}
    if len(shapes) != 1:
        raise ShapeMismatch(f"matrices of differing shapes {sorted(shapes)}")
    flat = [np.asarray(m, dtype=object).ravel().tolist() for m in mats]
    basis = EchelonBasis(len(flat[0]))
    kept = [i for i, v in enumerate(flat) if basis.add(v)]
    return basis.rank, kept
