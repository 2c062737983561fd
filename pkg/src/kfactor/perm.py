"""
Permutations of ``{0, ..., m}`` in one-line notation.

Products are read left to right: ``compose(p, q)`` applies ``p`` first, so
``(p*q)(x) == q(p(x))``.  Under this convention

>>> compose(cycle_to_permutation((0, 1), 2), cycle_to_permutation((0, 2), 2))
Permutation(images=(1, 2, 0))

which is the full cycle ``(0 1 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PermutationError, SizeMismatch

__all__ = [
    "Cycle", "Permutation",
    "compose", "compose_all", "full_cycle", "identity", "cycle_to_permutation",
    "normalize_cycle", "cycles", "num_cycles",
]

# a cycle written with its least entry first
Cycle = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    # images[x] is the image of x
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PermutationError(f"not a bijection on 0..{len(self.images) - 1}: {self.images}")

    @property
    def size(self) -> int:
        """The ``m`` of the ground set ``{0..m}``."""
        return len(self.images) - 1

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def cycles(self) -> list[Cycle]:
        return cycles(self)

    def __str__(self) -> str:
        cs = [c for c in cycles(self) if len(c) > 1]
        if not cs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def identity(m: int) -> Permutation:
    return Permutation(tuple(range(m + 1)))


def full_cycle(m: int) -> Permutation:
    """The long cycle ``(0 1 ... m)``; the identity when ``m == 0``."""
    if m < 0:
        raise PermutationError("m must be nonnegative")
    return Permutation(tuple(range(1, m + 1)) + (0,))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product ``p*q``: ``p`` acts first."""
    if len(p.images) != len(q.images):
        raise SizeMismatch(f"ground sets differ: {p.size} vs {q.size}")
    qi = q.images
    return Permutation(tuple(qi[y] for y in p.images))


def compose_all(perms: Iterable[Permutation], m: int) -> Permutation:
    result = list(range(m + 1))
    for p in perms:
        if p.size != m:
            raise SizeMismatch(f"ground sets differ: {p.size} vs {m}")
        pi = p.images
        result = [pi[y] for y in result]
    return Permutation(tuple(result))


def normalize_cycle(entries: Sequence[int]) -> Cycle:
    """Rotate a cycle so its least entry comes first."""
    entries = tuple(entries)
    if not entries:
        raise PermutationError("empty cycle")
    if len(set(entries)) != len(entries):
        raise PermutationError(f"repeated entry in cycle {entries}")
    i = entries.index(min(entries))
    return entries[i:] + entries[:i]


def cycle_to_permutation(c: Sequence[int], m: int) -> Permutation:
    images = list(range(m + 1))
    if len(set(c)) != len(c):
        raise PermutationError(f"repeated entry in cycle {tuple(c)}")
    for x in c:
        if not 0 <= x <= m:
            raise PermutationError(f"cycle entry {x} outside 0..{m}")
    for x, y in zip(c, tuple(c[1:]) + tuple(c[:1])):
        images[x] = y
    return Permutation(tuple(images))


def cycles(p: Permutation) -> list[Cycle]:
    """All cycles of ``p`` (fixed points included), each min-first, sorted by least entry."""
    seen = [False] * len(p.images)
    out = []
    for start in range(len(p.images)):
        if seen[start]:
            continue
        c = [start]
        seen[start] = True
        x = p.images[start]
        while x != start:
            c.append(x)
            seen[x] = True
            x = p.images[x]
        out.append(tuple(c))
    return out


def num_cycles(p: Permutation) -> int:
    return len(cycles(p))
