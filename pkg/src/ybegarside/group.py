"""Arithmetic in the structure group through the bijective 1-cocycle.

Every group element is named by its cocycle vector ``pi(g)`` in ``Z^n``. The
permutation ``phi(g)`` only depends on ``pi(g) mod m`` (``m`` the class), so a
table over the ``m^n`` simple elements, built once by breadth-first search,
is enough to multiply arbitrary elements:

    pi(gh) = pi(g) + phi(g) . pi(h),    phi(gh) = phi(g) o phi(h)
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import perm as P
from .errors import (
    ClassTooSmall,
    GermGuardExceeded,
    IndexOutOfRange,
    InternalInconsistency,
    NotPositive,
    PiCollision,
)
from .solution import SolutionTable, class_of, frozen_words

DEFAULT_MAX_GERM = 10**6

Vector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class GroupElement:
    vec: Vector

    def __len__(self) -> int:
        return len(self.vec)


def unit(n: int, i: int, scale: int = 1) -> Vector:
    v = [0] * n
    v[i] = scale
    return tuple(v)


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Germ:
    """The simples ``Div(Delta^{m-1})`` indexed by their residue vectors."""

    solution: SolutionTable
    m: int
    table: dict[Vector, P.Perm]
    witness: dict[Vector, tuple[int, ...]]

    @property
    def n(self) -> int:
        return self.solution.n

    @property
    def size(self) -> int:
        return len(self.table)

    def residue(self, vec: Sequence[int]) -> Vector:
        return tuple(v % self.m for v in vec)

    def phi(self, g: GroupElement) -> P.Perm:
        return self.table[self.residue(g.vec)]

    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.n)

    def generator(self, x: int) -> GroupElement:
        if not 0 <= x < self.n:
            raise IndexOutOfRange(f"generator {x} outside 0..{self.n - 1}")
        return GroupElement(unit(self.n, x))

    def simples(self) -> list[GroupElement]:
        """All simples, sorted by vector."""
        return [GroupElement(v) for v in sorted(self.table)]

    def element(self, vec: Sequence[int]) -> GroupElement:
        if len(vec) != self.n:
            raise IndexOutOfRange(f"vector of length {len(vec)}, expected {self.n}")
        return GroupElement(tuple(int(v) for v in vec))

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        pa = self.phi(a)
        out = GroupElement(_add(a.vec, P.act(pa, b.vec)))
        if self.phi(out) != P.compose(pa, self.phi(b)):
            raise PiCollision(f"phi is not multiplicative on {a.vec} * {b.vec}")
        return out

    def product(self, elements: Iterable[GroupElement]) -> GroupElement:
        out = self.identity()
        for g in elements:
            out = self.multiply(out, g)
        return out

    def inverse(self, a: GroupElement) -> GroupElement:
        pinv = P.inverse(self.phi(a))
        return GroupElement(tuple(-v for v in P.act(pinv, a.vec)))

    def power(self, a: GroupElement, k: int) -> GroupElement:
        base = a if k >= 0 else self.inverse(a)
        return self.product([base] * abs(k))

    def from_word(self, word: Sequence[int]) -> GroupElement:
        return self.product(self.generator(x) for x in word)

    def is_positive(self, vec: Sequence[int]) -> bool:
        """Whether the element with this vector lies in the structure monoid.

        Breadth-first search over positive prefixes, all of whose vectors lie
        componentwise between 0 and ``vec``.
        """
        target = tuple(vec)
        if any(v < 0 for v in target):
            return False
        start = (0,) * self.n
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if u == target:
                return True
            p = self.table[self.residue(u)]
            for x in range(self.n):
                j = p[x]
                if u[j] < target[j]:
                    w = u[:j] + (u[j] + 1,) + u[j + 1:]
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return False

    def left_divides(self, s: GroupElement, t: GroupElement) -> bool:
        """``s`` left-divides ``t`` in the monoid: ``s^{-1} t`` is positive."""
        for g in (s, t):
            if not self.is_positive(g.vec):
                raise NotPositive(f"{g.vec} is not a monoid element")
        return self.is_positive(self.multiply(self.inverse(s), t).vec)

    def right_divides(self, s: GroupElement, t: GroupElement) -> bool:
        for g in (s, t):
            if not self.is_positive(g.vec):
                raise NotPositive(f"{g.vec} is not a monoid element")
        return self.is_positive(self.multiply(t, self.inverse(s)).vec)

    def frozen(self) -> list[GroupElement]:
        return [self.from_word(w) for w in frozen_words(self.solution, self.m)]


def build_germ(S: SolutionTable, max_germ: int = DEFAULT_MAX_GERM) -> Germ:
    """Enumerate the ``m^n`` simples by breadth-first search from the empty word.

    States are ``(pi, phi)`` pairs; multiplying on the right by generator x
    adds the unit vector at ``phi(x)``, so vectors only grow along a word and
    the search can stop at the box ``{0..m-1}^n``.
    """
    m = class_of(S)
    n = S.n
    if m**n > max_germ:
        raise GermGuardExceeded(f"germ would have m^n = {m}^{n} = {m**n} > {max_germ} elements")
    start = (0,) * n
    table = {start: P.identity(n)}
    witness: dict[Vector, tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        p = table[v]
        for x in range(n):
            j = p[x]
            if v[j] + 1 >= m:
                continue
            w = v[:j] + (v[j] + 1,) + v[j + 1:]
            q = P.compose(p, S.sigma[x])
            seen = table.get(w)
            if seen is None:
                table[w] = q
                witness[w] = witness[v] + (x,)
                queue.append(w)
            elif seen != q:
                raise PiCollision(f"vector {w} reached with two permutations")
    if len(table) != m**n:
        raise InternalInconsistency(f"germ has {len(table)} elements, expected {m**n}")
    return Germ(S, m, table, witness)


def element_from_vector(G: Germ, v: Sequence[int]) -> GroupElement:
    return G.element(v)


def delta_and_divisors(G: Germ) -> tuple[GroupElement, list[GroupElement]]:
    """Garside element ``Delta`` (all-ones vector) and its divisors.

    Checks, among the simples, that Delta is the left lcm of the generators,
    that it is balanced with ``2^n`` divisors, and that each divisor is the
    left lcm of the generators dividing it.
    """
    if G.m < 2:
        raise ClassTooSmall("Delta is only defined here for class m >= 2")
    n = G.n
    delta = GroupElement((1,) * n)
    simples = G.simples()
    left = [s for s in simples if G.left_divides(s, delta)]
    right = [s for s in simples if G.right_divides(s, delta)]
    if len(left) != 2**n or set(left) != set(right):
        raise InternalInconsistency("Div(Delta) is not balanced of size 2^n")
    gens = [G.generator(x) for x in range(n)]

    def is_left_lcm(target: GroupElement, subset: list[GroupElement]) -> bool:
        if not all(G.left_divides(g, target) for g in subset):
            return False
        return all(
            G.left_divides(target, c)
            for c in simples
            if all(G.left_divides(g, c) for g in subset)
        )

    if not is_left_lcm(delta, gens):
        raise InternalInconsistency("Delta is not the left lcm of the generators")
    for s in left:
        below = [g for g in gens if G.left_divides(g, s)]
        if len(below) != sum(s.vec) or not is_left_lcm(s, below):
            raise InternalInconsistency(f"{s.vec} is not the lcm of its letters")
    return delta, left


@dataclass(frozen=True)
class CosetTables:
    """Canonical simple representatives of ``G/K`` (``T_K``) and of ``K/N`` (``T``)."""

    T_K: tuple[GroupElement, ...]
    T: tuple[GroupElement, ...]
    iyb_order: int


def _canon_key(g: GroupElement) -> tuple[int, Vector]:
    return sum(g.vec), g.vec


def coset_tables(G: Germ) -> CosetTables:
    iyb = len(P.closure(G.solution.sigma))
    by_phi: dict[P.Perm, GroupElement] = {}
    for s in sorted(G.simples(), key=_canon_key):
        by_phi.setdefault(G.phi(s), s)
    T_K = tuple(sorted(by_phi.values(), key=_canon_key))
    e = P.identity(G.n)
    T = tuple(sorted((s for s in G.simples() if G.phi(s) == e), key=_canon_key))
    if len(T_K) != iyb or len(T_K) * len(T) != G.size:
        raise InternalInconsistency(
            f"|T_K| = {len(T_K)}, |T| = {len(T)}, |IYB| = {iyb}, germ {G.size}"
        )
    # each simple is N u v for exactly one pair (u, v) and
    # pi(w) = pi(u) + pi(v) mod m
    hit = set()
    for u in T:
        for v in T_K:
            uv = G.multiply(u, v)
            w = G.residue(uv.vec)
            if G.residue(_add(u.vec, v.vec)) != w:
                raise InternalInconsistency(f"coset congruence fails for {u.vec}, {v.vec}")
            quotient = G.multiply(uv, G.inverse(GroupElement(w)))
            if any(c % G.m for c in quotient.vec):
                raise InternalInconsistency(f"{uv.vec} and {w} lie in different N-cosets")
            hit.add(w)
    if len(hit) != G.size:
        raise InternalInconsistency("T x T_K does not cover the simples")
    return CosetTables(T_K, T, iyb)
