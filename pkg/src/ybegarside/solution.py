"""Finite non-degenerate involutive set-theoretic solutions.

A solution on ``X = {0, ..., n-1}`` is stored as two tables of permutations,
``sigma[x]`` and ``gamma[y]``, with ``r(x, y) = (sigma[x][y], gamma[y][x])``.
All indices are 0-based here; the JSON format and the CLI use 1-based indices.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from os import PathLike
from typing import Any, Union

from . import perm as P
from .errors import (
    ClassSearchExceeded,
    GammaInconsistent,
    IndexOutOfRange,
    NotBijective,
    NotBraided,
    NotInvolutive,
    ParseError,
)

IRRETRACTABLE = "irretractable"


def _derive_gamma(sigma: Sequence[P.Perm]) -> tuple[P.Perm, ...]:
    # gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x)
    n = len(sigma)
    sigma_inv = [P.inverse(s) for s in sigma]
    return tuple(
        tuple(sigma_inv[sigma[x][y]][x] for x in range(n)) for y in range(n)
    )


@dataclass(frozen=True)
class SolutionTable:
    """A validated solution ``(X, r)``.

    Build instances through :meth:`from_tables` or :func:`load_solution`;
    the constructor itself does not validate.
    """

    sigma: tuple[P.Perm, ...]
    gamma: tuple[P.Perm, ...]

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def from_tables(cls, sigma, gamma=None) -> "SolutionTable":
        """Validate 0-based one-line tables and return the solution.

        When ``gamma`` is omitted it is derived from ``sigma`` through the
        involutive closed form; when given it is checked against it.
        """
        sigma = tuple(tuple(int(v) for v in row) for row in sigma)
        n = len(sigma)
        if n == 0:
            raise ParseError("a solution needs at least one element")
        for x, row in enumerate(sigma):
            if not P.is_permutation(row, n):
                raise NotBijective(f"sigma_{x + 1} = {P.one_based(row)} is not a permutation of 1..{n}")
        derived = _derive_gamma(sigma)
        if gamma is None:
            gamma = derived
        else:
            gamma = tuple(tuple(int(v) for v in row) for row in gamma)
            if len(gamma) != n:
                raise ParseError(f"gamma has {len(gamma)} rows, expected {n}")
            for y, row in enumerate(gamma):
                if not P.is_permutation(row, n):
                    raise NotBijective(f"gamma_{y + 1} = {P.one_based(row)} is not a permutation of 1..{n}")
            for y in range(n):
                for x in range(n):
                    if gamma[y][x] != derived[y][x]:
                        raise GammaInconsistent(
                            f"gamma_{y + 1}({x + 1}) = {gamma[y][x] + 1}, "
                            f"but sigma^-1_{sigma[x][y] + 1}({x + 1}) = {derived[y][x] + 1}"
                        )
        sol = cls(sigma, gamma)
        sol._check_involutive()
        sol._check_braided()
        sol._check_composition_convention()
        return sol

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x][y], self.gamma[y][x]

    def _check_involutive(self) -> None:
        n = self.n
        for x in range(n):
            for y in range(n):
                if self.r(*self.r(x, y)) != (x, y):
                    raise NotInvolutive(f"r(r({x + 1},{y + 1})) != ({x + 1},{y + 1})")

    def _check_braided(self) -> None:
        n = self.n
        r = self.r

        def r12(t):
            return (*r(t[0], t[1]), t[2])

        def r23(t):
            return (t[0], *r(t[1], t[2]))

        for x in range(n):
            for y in range(n):
                for z in range(n):
                    t = (x, y, z)
                    if r12(r23(r12(t))) != r23(r12(r23(t))):
                        raise NotBraided(
                            f"braid relation fails on ({x + 1},{y + 1},{z + 1})"
                        )

    def _check_composition_convention(self) -> None:
        # sigma_x o sigma_y = sigma_{x'} o sigma_{y'} whenever r(x,y) = (x',y');
        # guaranteed by the axioms, so a failure means a bug in this module
        for x in range(self.n):
            for y in range(self.n):
                a, b = self.r(x, y)
                if P.compose(self.sigma[x], self.sigma[y]) != P.compose(self.sigma[a], self.sigma[b]):
                    raise NotBraided(
                        f"sigma is not a homomorphism on the relation "
                        f"x{x + 1}x{y + 1} = x{a + 1}x{b + 1}"
                    )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "sigma": [P.one_based(s) for s in self.sigma],
            "gamma": [P.one_based(g) for g in self.gamma],
        }


def _parse_mapping(data: Mapping[str, Any]) -> SolutionTable:
    if not isinstance(data, Mapping):
        raise ParseError("solution file must hold a JSON object")
    has_sigma = "sigma" in data
    has_cycles = "sigma_cycles" in data
    if has_sigma == has_cycles:
        raise ParseError('exactly one of "sigma" and "sigma_cycles" must be present')
    n = data.get("n")
    try:
        if has_sigma:
            rows = [[int(v) - 1 for v in row] for row in data["sigma"]]
        else:
            if n is None:
                n = len(data["sigma_cycles"])
            rows = [P.from_cycles(cycles, int(n), base=1) for cycles in data["sigma_cycles"]]
        gamma = data.get("gamma")
        if gamma is not None:
            gamma = [[int(v) - 1 for v in row] for row in gamma]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed solution tables: {exc}") from exc
    if n is not None:
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError('"n" must be an integer')
        if len(rows) != n:
            raise ParseError(f'"n" is {n} but {len(rows)} sigma rows were given')
    return SolutionTable.from_tables(rows, gamma)


def load_solution(raw: Union[str, bytes, Mapping[str, Any], PathLike]) -> SolutionTable:
    """Parse and validate a solution from JSON text, a mapping, or a file path."""
    if isinstance(raw, PathLike):
        with open(raw, encoding="utf-8") as fh:
            raw = fh.read()
    if isinstance(raw, (str, bytes)):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    return _parse_mapping(raw)


def apply_r(S: SolutionTable, x: int, y: int) -> tuple[int, int]:
    if not (0 <= x < S.n and 0 <= y < S.n):
        raise IndexOutOfRange(f"({x}, {y}) outside 0..{S.n - 1}")
    return S.r(x, y)


def diagonal_map(S: SolutionTable) -> P.Perm:
    """``D(x) = sigma_x^{-1}(x)``."""
    return tuple(P.inverse(S.sigma[x])[x] for x in range(S.n))


def diagonal_inverse_from_gamma(S: SolutionTable) -> P.Perm:
    return tuple(P.inverse(S.gamma[y])[y] for y in range(S.n))


def is_square_free(S: SolutionTable) -> bool:
    return all(S.r(x, x) == (x, x) for x in range(S.n))


def class_of(S: SolutionTable, bound: int | None = None) -> int:
    """Smallest ``m >= 1`` with ``sigma_x sigma_D(x) ... sigma_D^{m-1}(x) = id`` for all x.

    The default bound is the order of the group generated by the sigmas.
    """
    if bound is None:
        bound = len(P.closure(S.sigma))
    D = diagonal_map(S)
    e = P.identity(S.n)
    prods = [e] * S.n
    points = list(range(S.n))
    for m in range(1, bound + 1):
        for x in range(S.n):
            prods[x] = P.compose(prods[x], S.sigma[points[x]])
            points[x] = D[points[x]]
        if all(p == e for p in prods):
            return m
    raise ClassSearchExceeded(f"no class m <= {bound}")


def satisfies_condition_C(S: SolutionTable) -> bool:
    D = diagonal_map(S)
    e = P.identity(S.n)
    return all(P.compose(S.sigma[x], S.sigma[D[x]]) == e for x in range(S.n))


def frozen_words(S: SolutionTable, m: int | None = None) -> list[tuple[int, ...]]:
    """Word ``(x, D(x), ..., D^{m-1}(x))`` for every x."""
    if m is None:
        m = class_of(S)
    D = diagonal_map(S)
    words = []
    for x in range(S.n):
        w = [x]
        for _ in range(m - 1):
            w.append(D[w[-1]])
        words.append(tuple(w))
    return words


def retraction(S: SolutionTable) -> tuple[SolutionTable, tuple[int, ...]]:
    """Quotient by ``x ~ y iff sigma_x == sigma_y``.

    Returns the retracted solution and the class map; classes are numbered
    in order of their smallest member.
    """
    labels: dict[P.Perm, int] = {}
    cls = []
    for x in range(S.n):
        cls.append(labels.setdefault(S.sigma[x], len(labels)))
    k = len(labels)
    rep = [cls.index(c) for c in range(k)]
    sigma = [[cls[S.sigma[rep[a]][rep[b]]] for b in range(k)] for a in range(k)]
    gamma = [[cls[S.gamma[rep[b]][rep[a]]] for a in range(k)] for b in range(k)]
    return SolutionTable.from_tables(sigma, gamma), tuple(cls)


def retraction_levels(S: SolutionTable) -> list[int]:
    """Sizes ``|S|, |Ret(S)|, ...`` until size 1 or no further shrinking."""
    sizes = [S.n]
    while S.n > 1:
        S, _ = retraction(S)
        if S.n == sizes[-1]:
            break
        sizes.append(S.n)
    return sizes


def multipermutation_level(S: SolutionTable) -> Union[int, str]:
    sizes = retraction_levels(S)
    if sizes[-1] != 1:
        return IRRETRACTABLE
    return len(sizes) - 1


@dataclass(frozen=True)
class SolutionProfile:
    n: int
    class_m: int
    D_table: P.Perm
    frozen_words: tuple[tuple[int, ...], ...]
    satisfies_C: bool
    square_free: bool
    retraction_levels: tuple[int, ...]
    multipermutation_level: Union[int, str]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "class": self.class_m,
            "D": P.one_based(self.D_table),
            "frozen_words": [P.one_based(w) for w in self.frozen_words],
            "satisfies_C": self.satisfies_C,
            "square_free": self.square_free,
            "retraction_levels": list(self.retraction_levels),
            "multipermutation_level": self.multipermutation_level,
        }


def profile(S: SolutionTable) -> SolutionProfile:
    m = class_of(S)
    return SolutionProfile(
        n=S.n,
        class_m=m,
        D_table=diagonal_map(S),
        frozen_words=tuple(frozen_words(S, m)),
        satisfies_C=satisfies_condition_C(S),
        square_free=is_square_free(S),
        retraction_levels=tuple(retraction_levels(S)),
        multipermutation_level=multipermutation_level(S),
    )
