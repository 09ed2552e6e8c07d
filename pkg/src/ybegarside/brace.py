"""Left brace structure on the structure group.

Addition is addition of cocycle vectors; multiplication is the group law.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from . import perm as P
from .group import Germ, GroupElement

DEFAULT_SEED = 0x7B1
EXHAUSTIVE_BUDGET = 10**4
DEFAULT_SAMPLES = 10**4

Triple = tuple[GroupElement, GroupElement, GroupElement]


@dataclass(frozen=True)
class BraceView:
    germ: Germ

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(tuple(x + y for x, y in zip(a.vec, b.vec)))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(tuple(x - y for x, y in zip(a.vec, b.vec)))

    def neg(self, a: GroupElement) -> GroupElement:
        return GroupElement(tuple(-x for x in a.vec))

    def lam(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """``lambda_a(b) = a.b - a``."""
        return self.sub(self.germ.multiply(a, b), a)

    def lam_inverse(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """The element ``c`` with ``lambda_a(c) = b``."""
        return GroupElement(P.act(P.inverse(self.germ.phi(a)), b.vec))

    def in_socle(self, a: GroupElement) -> bool:
        return self.germ.phi(a) == P.identity(self.germ.n)


def brace_add(B: BraceView, a: GroupElement, b: GroupElement) -> GroupElement:
    return B.add(a, b)


def lambda_map(B: BraceView, a: GroupElement, b: GroupElement) -> GroupElement:
    return B.lam(a, b)


def socle_contains(B: BraceView, a: GroupElement) -> bool:
    return B.in_socle(a)


@dataclass(frozen=True)
class BraceReport:
    passed: bool
    triples_checked: int
    mode: str
    seed: int | None = None
    failed_law: str | None = None
    counterexample: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "triples_checked": self.triples_checked,
            "mode": self.mode,
            "seed": self.seed,
            "failed_law": self.failed_law,
            "counterexample": None if self.counterexample is None else [list(v) for v in self.counterexample],
        }


def default_triples(
    G: Germ,
    budget: int = EXHAUSTIVE_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> tuple[list[Triple], str, int | None]:
    """All triples of simples if there are at most ``budget``, else a seeded sample.

    Sampled coordinates range over ``[-m, 2m)`` so that the sample leaves the
    box of simples in both directions.
    """
    simples = G.simples()
    if len(simples) ** 3 <= budget:
        triples = [(a, b, c) for a in simples for b in simples for c in simples]
        return triples, "exhaustive", None
    rng = random.Random(seed)
    m, n = G.m, G.n

    def draw() -> GroupElement:
        return GroupElement(tuple(rng.randrange(-m, 2 * m) for _ in range(n)))

    return [(draw(), draw(), draw()) for _ in range(samples)], "sampled", seed


def verify_brace_laws(
    B: BraceView, sample: Iterable[Triple] | None = None, seed: int = DEFAULT_SEED
) -> BraceReport:
    """Check the left brace identity, multiplicativity of lambda and the exchange law."""
    G = B.germ
    if sample is None:
        sample, mode, used_seed = default_triples(G, seed=seed)
    else:
        mode, used_seed = "given", None
    mul = G.multiply
    count = 0
    for a, b, c in sample:
        count += 1
        laws = {
            "a(b+c) = ab + ac - a": mul(a, B.add(b, c)) == B.sub(B.add(mul(a, b), mul(a, c)), a),
            "lambda_ab = lambda_a lambda_b": B.lam(mul(a, b), c) == B.lam(a, B.lam(b, c)),
            "a lambda_a^-1(b) = b lambda_b^-1(a)": mul(a, B.lam_inverse(a, b)) == mul(b, B.lam_inverse(b, a)),
            "lambda_a additive": B.lam(a, B.add(b, c)) == B.add(B.lam(a, b), B.lam(a, c)),
        }
        for name, ok in laws.items():
            if not ok:
                return BraceReport(False, count, mode, used_seed, name, (a.vec, b.vec, c.vec))
    return BraceReport(True, count, mode, used_seed)
