"""Brute-force cross-checks.

Everything here multiplies in the semidirect product ``Z^n x| Sym(n)`` directly
from the sigma table, word by word, with no use of the germ or its lookup
table. The results are compared against the germ-based computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Union

from .errors import BallGuardExceeded
from .group import Germ, GroupElement, build_germ, coset_tables, delta_and_divisors
from .linalg import EchelonBasis
from .rep import dimension_report
from .solution import SolutionTable

DEFAULT_MAX_BALL = 10**6

Pair = tuple[tuple[int, ...], tuple[int, ...]]


def _mul(a: Pair, b: Pair) -> Pair:
    va, pa = a
    vb, pb = b
    moved = [0] * len(pa)
    for i, v in enumerate(vb):
        moved[pa[i]] = v
    return tuple(x + y for x, y in zip(va, moved)), tuple(pa[i] for i in pb)


def _inv_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _letters(S: SolutionTable, inverses: bool) -> list[Pair]:
    n = S.n
    gens = []
    for x in range(n):
        t = tuple(int(i == x) for i in range(n))
        gens.append((t, S.sigma[x]))
    if inverses:
        for x in range(n):
            # (t_x, s)^-1 = (-s^-1 . t_x, s^-1)
            sinv = _inv_perm(S.sigma[x])
            t = tuple(-int(sinv[x] == i) for i in range(n))
            gens.append((t, sinv))
    return gens


def _solution(source: Union[SolutionTable, Germ]) -> SolutionTable:
    return source.solution if isinstance(source, Germ) else source


def ball_layers(
    source: Union[SolutionTable, Germ],
    radius: int,
    inverses: bool = True,
    max_size: int = DEFAULT_MAX_BALL,
) -> list[dict[tuple[int, ...], tuple[int, ...]]]:
    """Spheres of the Cayley graph: layer ``k`` maps vector -> permutation for length ``k``."""
    S = _solution(source)
    letters = _letters(S, inverses)
    e = ((0,) * S.n, tuple(range(S.n)))
    seen = {e[0]: e[1]}
    layers = [{e[0]: e[1]}]
    for _ in range(radius):
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for v, p in layers[-1].items():
            for g in letters:
                w, q = _mul((v, p), g)
                if w not in seen and w not in nxt:
                    nxt[w] = q
        seen.update(nxt)
        if len(seen) > max_size:
            raise BallGuardExceeded(f"ball exceeds {max_size} elements")
        layers.append(nxt)
    return layers


def ball(
    source: Union[SolutionTable, Germ],
    radius: int,
    inverses: bool = True,
    max_size: int = DEFAULT_MAX_BALL,
) -> set[GroupElement]:
    """All products of at most ``radius`` generators (and inverses)."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    out: set[GroupElement] = set()
    for layer in ball_layers(source, radius, inverses, max_size):
        out.update(GroupElement(v) for v in layer)
    return out


@dataclass(frozen=True)
class InjectivityReport:
    passed: bool
    radius: int
    words_checked: int
    distinct_vectors: int
    witnesses: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "radius": self.radius,
            "words_checked": self.words_checked,
            "distinct_vectors": self.distinct_vectors,
            "witnesses": None if self.witnesses is None else [[x + 1 for x in w] for w in self.witnesses],
        }


def check_pi_injectivity(S: SolutionTable, radius: int) -> InjectivityReport:
    """Words with equal cocycle vectors must have equal permutations."""
    letters = _letters(S, inverses=False)
    first: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    count = 0
    for length in range(radius + 1):
        for word in itertools.product(range(S.n), repeat=length):
            g = ((0,) * S.n, tuple(range(S.n)))
            for x in word:
                g = _mul(g, letters[x])
            count += 1
            prev = first.setdefault(g[0], (g[1], word))
            if prev[0] != g[1]:
                return InjectivityReport(False, radius, count, len(first), (prev[1], word))
    return InjectivityReport(True, radius, count, len(first))


def _words_in_box(S: SolutionTable, m: int, max_words: int = DEFAULT_MAX_BALL):
    """Depth-first enumeration of positive words whose vectors stay below ``m``."""
    letters = _letters(S, inverses=False)
    stack = [((), ((0,) * S.n, tuple(range(S.n))))]
    count = 0
    while stack:
        word, g = stack.pop()
        count += 1
        if count > max_words:
            raise BallGuardExceeded(f"more than {max_words} words in the box")
        yield word, g
        for x, letter in enumerate(letters):
            h = _mul(g, letter)
            if max(h[0]) < m:
                stack.append((word + (x,), h))


@dataclass(frozen=True)
class CountReport:
    passed: bool
    counts: dict[str, Any] = field(default_factory=dict)
    failures: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "counts": dict(self.counts), "failures": list(self.failures)}


def check_counts(S: SolutionTable, germ: Germ | None = None) -> CountReport:
    """Recount simples, divisors of Delta, cosets and the IYB group by brute force."""
    G = germ if germ is not None else build_germ(S)
    m, n = G.m, S.n
    counts: dict[str, Any] = {}
    failures = []

    box = {}
    for _, (v, p) in _words_in_box(S, m):
        box.setdefault(v, p)
    counts["simples"] = len(box)
    if len(box) != m**n or len(box) != G.size:
        failures.append(f"simples: brute {len(box)}, germ {G.size}, m^n {m**n}")

    # IYB group: products of sigmas, closed by brute multiplication
    e = tuple(range(n))
    group = {e}
    frontier = [e]
    while frontier:
        frontier = [
            q for q in {tuple(p[i] for i in s) for p in frontier for s in S.sigma} if q not in group
        ]
        group.update(frontier)
    counts["iyb_order"] = len(group)

    C = coset_tables(G)
    counts["T"] = len(C.T)
    counts["T_K"] = len(C.T_K)
    if len(C.T) * len(C.T_K) != m**n:
        failures.append(f"|T| * |T_K| = {len(C.T) * len(C.T_K)} != {m**n}")
    if C.iyb_order != len(group):
        failures.append(f"IYB order: brute {len(group)}, tables {C.iyb_order}")
    if len(set(box.values())) != len(group):
        failures.append("simples do not hit every element of the IYB group")

    if m >= 2:
        # divisors of Delta: prefixes and suffixes of every length-n word reaching (1,...,1)
        letters = _letters(S, inverses=False)
        ones = (1,) * n
        prefixes, suffixes = set(), set()
        for word, (v, _) in _words_in_box(S, 2):
            if len(word) == n and v == ones:
                for k in range(n + 1):
                    g = ((0,) * n, e)
                    for x in word[:k]:
                        g = _mul(g, letters[x])
                    prefixes.add(g[0])
                    h = ((0,) * n, e)
                    for x in word[k:]:
                        h = _mul(h, letters[x])
                    suffixes.add(h[0])
        counts["div_delta"] = len(prefixes)
        if len(prefixes) != 2**n or prefixes != suffixes:
            failures.append(f"Div(Delta): {len(prefixes)} left, {len(suffixes)} right, expected {2**n}")
        _, divs = delta_and_divisors(G)
        if {d.vec for d in divs} != prefixes:
            failures.append("Div(Delta) differs from the germ computation")
    return CountReport(not failures, counts, tuple(failures))


@dataclass(frozen=True)
class StabilizationReport:
    ranks: tuple[int, ...]
    ball_sizes: tuple[int, ...]
    stabilized: bool
    dimension: int
    bound: int

    @property
    def agrees(self) -> bool:
        return self.stabilized and self.ranks[-1] == self.dimension

    def to_dict(self) -> dict[str, Any]:
        return {
            "ranks": list(self.ranks),
            "ball_sizes": list(self.ball_sizes),
            "stabilized": self.stabilized,
            "dimension": self.dimension,
            "bound": self.bound,
            "agrees": self.agrees,
        }


def _affine_flat(v, p) -> list[int]:
    n = len(p)
    M = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n):
        M[p[j]][j] = 1
        M[j][n] = v[j]
    M[n][n] = 1
    return [x for row in M for x in row]


def check_span_stabilization(
    S: SolutionTable, max_radius: int, max_size: int = DEFAULT_MAX_BALL, germ: Germ | None = None
) -> StabilizationReport:
    """Rank of ``{psi(g)}`` over growing balls, compared with the spanning-set dimension."""
    n = S.n
    basis = EchelonBasis((n + 1) ** 2)
    ranks, sizes = [], []
    total = 0
    for layer in ball_layers(S, max_radius, True, max_size):
        for v, p in layer.items():
            basis.add(_affine_flat(v, p))
        total += len(layer)
        ranks.append(basis.rank)
        sizes.append(total)
    report = dimension_report(S, germ=germ)
    stabilized = len(ranks) >= 2 and ranks[-1] == ranks[-2]
    return StabilizationReport(tuple(ranks), tuple(sizes), stabilized, report.dimension, report.bound)
