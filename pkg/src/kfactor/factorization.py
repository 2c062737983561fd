"""
Minimal ``k``-factorizations of the long cycle ``(0 1 ... kn)``.

A ``k``-factorization is a sequence of ``n`` cycles of length ``k + 1``,
each written least entry first as ``(a^0 a^1 ... a^k)``, whose left-to-right
product is the long cycle on ``{0..kn}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from . import perm
from .errors import (
    EntryOutOfRange, NotInLowerImage, NotMinFirst, ParseError,
    ProductNotFullCycle, WrongFactorCount, WrongFactorLength,
)

__all__ = [
    "KFactorization", "AreaStats",
    "validate", "area_stats", "lower", "upper", "contract_lower", "canonical",
    "parse_text", "to_text", "to_json", "from_json",
]


@dataclass(frozen=True)
class KFactorization:
    k: int
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(c) for c in self.factors))
        if self.k < 1:
            raise WrongFactorLength(f"k must be positive, got {self.k}")
        for j, c in enumerate(self.factors, 1):
            if len(c) != self.k + 1:
                raise WrongFactorLength(f"factor {j} has length {len(c)}, expected {self.k + 1}")
            if len(set(c)) != len(c):
                raise WrongFactorLength(f"factor {j} repeats an entry: {c}")
            if c[0] != min(c):
                raise NotMinFirst(f"factor {j} does not start with its least entry: {c}")

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], k: Optional[int] = None) -> "KFactorization":
        """Build from cycles in any rotation."""
        cycles = [perm.normalize_cycle(c) for c in cycles]
        if k is None:
            if not cycles:
                raise WrongFactorCount("cannot infer k from an empty factor list")
            k = len(cycles[0]) - 1
        return cls(k, tuple(cycles))

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        """Largest ground-set element, ``k * n``."""
        return self.k * self.n

    def least(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.factors)

    def product(self) -> perm.Permutation:
        """Left-to-right product, touching only each factor's support."""
        m = self.m
        image = list(range(m + 1))
        # preimage[y] is the x currently sent to y
        preimage = list(range(m + 1))
        for c in self.factors:
            for x in c:
                if not 0 <= x <= m:
                    raise EntryOutOfRange(f"entry {x} outside 0..{m}")
            sources = [preimage[y] for y in c]
            for src, y in zip(sources, c[1:] + c[:1]):
                image[src] = y
                preimage[y] = src
        return perm.Permutation(tuple(image))

    def __str__(self) -> str:
        return to_text(self)


def validate(f: KFactorization, n: Optional[int] = None) -> None:
    """Check ranges and that the factors multiply to the long cycle."""
    if n is not None and f.n != n:
        raise WrongFactorCount(f"expected {n} factors, got {f.n}")
    if f.n == 0:
        raise WrongFactorCount("a factorization needs at least one factor")
    m = f.m
    for j, c in enumerate(f.factors, 1):
        for x in c:
            if not 0 <= x <= m:
                raise EntryOutOfRange(f"factor {j} entry {x} outside 0..{m}")
    if f.product() != perm.full_cycle(m):
        raise ProductNotFullCycle(f"{to_text(f)} multiplies to {f.product()}, not (0 1 ... {m})")


@dataclass(frozen=True)
class AreaStats:
    area: int
    coarea: int
    semiarea: int
    cosemiarea: int

    def as_dict(self) -> dict:
        return {"area": self.area, "coarea": self.coarea,
                "semiarea": self.semiarea, "cosemiarea": self.cosemiarea}


def area_stats(f: KFactorization) -> AreaStats:
    k, n = f.k, f.n
    base = comb(k * n, 2)
    pad = n * comb(k, 2)
    return AreaStats(
        area=base - pad - k * sum(c[0] for c in f.factors),
        coarea=k * sum(c[k] - 1 for c in f.factors) - base - pad,
        semiarea=base - sum(sum(c[:k]) for c in f.factors),
        cosemiarea=sum(x - 1 for c in f.factors for x in c[1:]) - base,
    )


def lower(f: KFactorization) -> KFactorization:
    """Replace ``(a^0 ... a^k)`` by ``(a^0 a^1)(a^0 a^2)...(a^0 a^k)``."""
    return KFactorization(1, tuple((c[0], x) for c in f.factors for x in c[1:]))


def upper(f: KFactorization) -> KFactorization:
    """Replace ``(a^0 ... a^k)`` by ``(a^0 a^k)(a^1 a^k)...(a^{k-1} a^k)``."""
    return KFactorization(1, tuple((x, c[-1]) for c in f.factors for x in c[:-1]))


def contract_lower(g: KFactorization, k: int) -> KFactorization:
    """Inverse of `lower` on its image; raises ``NotInLowerImage`` otherwise."""
    if g.k != 1:
        raise NotInLowerImage(f"expected transpositions, got k={g.k}")
    if g.n % k:
        raise NotInLowerImage(f"{g.n} factors do not split into blocks of {k}")
    factors = []
    for start in range(0, g.n, k):
        block = g.factors[start:start + k]
        a = block[0][0]
        tops = [t[1] for t in block]
        if any(t[0] != a for t in block):
            raise NotInLowerImage(f"block at factor {start + 1} has mixed least entries: {block}")
        if any(x >= y for x, y in zip(tops, tops[1:])):
            raise NotInLowerImage(f"block at factor {start + 1} is not increasing: {block}")
        factors.append((a, *tops))
    return KFactorization(k, tuple(factors))


def canonical(n: int, k: int) -> KFactorization:
    """The factorization ``(0 1 .. k)(0 k+1 .. 2k)...(0 (n-1)k+1 .. nk)``."""
    return KFactorization(k, tuple(
        (0, *range((i - 1) * k + 1, i * k + 1)) for i in range(1, n + 1)
    ))


# serialization

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_text(text: str, k: Optional[int] = None) -> KFactorization:
    """Parse ``"(0 1 2)(0 3 4)"``; rotations are normalized, whitespace and commas tolerated."""
    stripped = _CYCLE.sub("", text)
    if stripped.strip():
        raise ParseError(f"unexpected text outside cycles: {stripped.strip()!r}")
    cycles = []
    for body in _CYCLE.findall(text):
        try:
            cycles.append([int(x) for x in body.replace(",", " ").split()])
        except ValueError as e:
            raise ParseError(f"bad cycle ({body})") from e
    if not cycles:
        raise ParseError("no cycles found")
    try:
        f = KFactorization.from_cycles(cycles, k)
    except ValueError as e:
        if isinstance(e, WrongFactorLength):
            raise
        raise ParseError(str(e)) from e
    return f


def to_text(f: KFactorization) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in f.factors)


def to_json(f: KFactorization) -> str:
    return json.dumps({"k": f.k, "n": f.n, "factors": [list(c) for c in f.factors]})


def from_json(text: str, k: Optional[int] = None) -> KFactorization:
    try:
        obj = json.loads(text)
        cycles = [[int(x) for x in c] for c in obj["factors"]]
        kk = int(obj.get("k", k if k is not None else len(cycles[0]) - 1))
    except (ValueError, KeyError, TypeError, IndexError) as e:
        raise ParseError(f"bad factorization JSON: {e}") from e
    if k is not None and kk != k:
        raise ParseError(f"factorization has k={kk} but k={k} was requested")
    if "n" in obj and obj["n"] != len(cycles):
        raise WrongFactorCount(f"n={obj['n']} but {len(cycles)} factors given")
    return KFactorization.from_cycles(cycles, kk)
