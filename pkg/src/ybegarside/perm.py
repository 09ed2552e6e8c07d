"""Permutations of ``range(n)`` in one-line form, stored as tuples.

Composition follows ``compose(f, g)(i) == f[g[i]]``: the right factor acts first.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    n = len(p) if n is None else n
    return len(p) == n and sorted(p) == list(range(n))


def compose(f: Perm, g: Perm) -> Perm:
    return tuple(f[i] for i in g)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def act(p: Perm, vec: Sequence[int]) -> tuple[int, ...]:
    """Permute coordinates so that the unit vector ``t_x`` goes to ``t_{p(x)}``."""
    out = [0] * len(p)
    for i, v in enumerate(vec):
        out[p[i]] = v
    return tuple(out)


def from_cycles(cycles: Iterable[Sequence[int]], n: int, base: int = 0) -> Perm:
    """Expand a product of disjoint cycles into one-line form.

    ``(a1, a2, ..., ak)`` sends ``a1 -> a2 -> ... -> ak -> a1``.
    """
    img = list(range(n))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = [c - base for c in cyc]
        for c in cyc:
            if not 0 <= c < n:
                raise ValueError(f"cycle entry {c + base} out of range")
            if c in seen:
                raise ValueError("cycles are not disjoint")
            seen.add(c)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def to_cycles(p: Perm, base: int = 0) -> list[tuple[int, ...]]:
    out = []
    seen: set[int] = set()
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(c + base for c in cyc))
    return out


def closure(gens: Sequence[Perm]) -> set[Perm]:
    """Elements of the group generated by ``gens`` (orbit of the identity)."""
    n = len(gens[0]) if gens else 0
    e = identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def one_based(p: Sequence[int]) -> list[int]:
    return [i + 1 for i in p]
