"""
Exhaustive generators for forests, ``k``-forests, ``k``-factorizations and
``k``-parking functions, plus a brute-force factorization search used only as
an independent oracle.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from . import perm
from .archmap import jcdal_inverse
from .errors import CycleDetected, SelfLoop, SizeGuard
from .factorization import KFactorization
from .forest import KForest, RootedForest, validate
from .parking import ParkingFunction, is_k_parking

__all__ = [
    "expected_count", "forests", "k_forests", "k_factorizations",
    "brute_force_factorizations", "k_parking_functions",
]

BRUTE_FORCE_LIMIT = 6


def expected_count(n: int, k: int) -> int:
    """``(kn + 1)^(n - 1)``."""
    return (k * n + 1) ** (n - 1) if n else 1


def forests(n: int) -> Iterator[RootedForest]:
    """Every rooted forest on ``1..n``, parent arrays in lexicographic order."""
    for parent in product(range(n + 1), repeat=n):
        F = RootedForest(parent)
        try:
            validate(F)
        except (SelfLoop, CycleDetected):
            continue
        yield F


def k_forests(n: int, k: int) -> Iterator[KForest]:
    for F in forests(n):
        slots = [v for v in range(n) if F.parent[v]]
        for cols in product(range(k), repeat=len(slots)):
            colour: list = [None] * n
            for v, c in zip(slots, cols):
                colour[v] = c
            yield KForest(F, k, tuple(colour))


def k_factorizations(n: int, k: int) -> Iterator[KFactorization]:
    """``F_n^k`` listed through the inverse bijection from ``k``-forests."""
    for F in k_forests(n, k):
        yield jcdal_inverse(F)


def brute_force_factorizations(n: int, k: int, override: bool = False) -> set[KFactorization]:
    """
    Search all sequences of ``(k+1)``-cycles for products equal to the long cycle.

    Each factor can add at most ``k`` cycles to the remaining quotient, so a
    prefix of ``t`` factors survives only if ``prefix^-1 * sigma`` has exactly
    ``1 + k*t`` cycles.
    """
    m = k * n
    if m > BRUTE_FORCE_LIMIT and not override:
        raise SizeGuard(f"brute force refused for kn={m} > {BRUTE_FORCE_LIMIT}")
    cycles = []
    for subset in combinations(range(m + 1), k + 1):
        for rest in permutations(subset[1:]):
            c = (subset[0], *rest)
            p = perm.cycle_to_permutation(c, m)
            # sigma = c * rest  =>  rest = c^-1 * sigma
            cycles.append((c, p.inverse()))
    sigma = perm.full_cycle(m)
    found: set[KFactorization] = set()

    def search(remaining: perm.Permutation, chosen: list, t: int) -> None:
        if t == n:
            if remaining.images == tuple(range(m + 1)):
                found.add(KFactorization(k, tuple(chosen)))
            return
        for c, c_inv in cycles:
            rest = perm.compose(c_inv, remaining)
            if perm.num_cycles(rest) == 1 + k * (t + 1):
                chosen.append(c)
                search(rest, chosen, t + 1)
                chosen.pop()

    search(sigma, [], 0)
    return found


def k_parking_functions(n: int, k: int) -> Iterator[ParkingFunction]:
    top = k * (n - 1) if n else 0
    for entries in product(range(top + 1), repeat=n):
        if is_k_parking(entries, k):
            yield ParkingFunction(k, entries)
