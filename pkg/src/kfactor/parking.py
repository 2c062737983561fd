"""
``k``-parking functions and their correspondence with ``k``-factorizations.

The projection `L` keeps the least entry of each factor.  Its inverse expands
a ``k``-parking function into an ordinary parking function, rebuilds the
factorization into transpositions with a stack sweep (`sb_inverse`), and
contracts the result back into ``(k+1)``-cycles.

>>> L(L_inverse(ParkingFunction(3, (0, 5, 1)))).entries
(0, 5, 1)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from . import factorization as fz
from .errors import EmptyPopRequired, Inconsistency, NotInLowerImage, NotParking, ParseError, StackNotEmptied
from .factorization import KFactorization

__all__ = [
    "ParkingFunction",
    "is_k_parking", "disp", "L", "sb_inverse", "expand", "L_inverse",
    "parse_text", "to_text", "to_json", "from_json",
]


def is_k_parking(entries: Sequence[int], k: int) -> bool:
    return all(b >= 0 and b <= k * i for i, b in enumerate(sorted(entries)))


@dataclass(frozen=True)
class ParkingFunction:
    k: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not is_k_parking(self.entries, self.k):
            raise NotParking(f"{self.entries} is not a {self.k}-parking function")

    @property
    def n(self) -> int:
        return len(self.entries)


def disp(p: ParkingFunction) -> int:
    """Displacement ``k * C(n, 2) - sum(entries)``."""
    return p.k * comb(p.n, 2) - sum(p.entries)


def L(f: KFactorization) -> ParkingFunction:
    return ParkingFunction(f.k, f.least())


def expand(p: ParkingFunction, k: Optional[int] = None) -> ParkingFunction:
    """Repeat every entry ``k`` times in place."""
    k = p.k if k is None else k
    return ParkingFunction(1, tuple(a for a in p.entries for _ in range(k)))


def sb_inverse(p: ParkingFunction) -> KFactorization:
    """
    The factorization into transpositions whose least entries are ``p``.

    Baseline positions are swept left to right with a stack of open arches.
    At position ``v`` arches are closed while the top label exceeds every label
    starting at ``v`` and the closed labels decrease; then the arches starting
    at ``v`` are opened, smallest label on top.
    """
    if p.k != 1:
        raise ValueError("sb_inverse expects an ordinary parking function (k=1)")
    m = p.n
    starts: list[list[int]] = [[] for _ in range(m + 1)]
    for i, a in enumerate(p.entries, 1):
        starts[a].append(i)
    right = [0] * (m + 1)
    stack: list[int] = []
    for v in range(m + 1):
        ceiling = max(starts[v], default=0)
        last = None
        while stack and stack[-1] > ceiling and (last is None or stack[-1] < last):
            last = stack.pop()
            right[last] = v
        if v and last is None and not starts[v]:
            # an untouched baseline point would be an isolated vertex
            raise EmptyPopRequired(f"position {v} neither opens nor closes an arch")
        stack.extend(reversed(starts[v]))
    if stack:
        raise StackNotEmptied(f"arches {sorted(stack)} never close")
    return KFactorization(1, tuple((a, right[i]) for i, a in enumerate(p.entries, 1)))


def L_inverse(p: ParkingFunction) -> KFactorization:
    try:
        return fz.contract_lower(sb_inverse(expand(p)), p.k)
    except NotInLowerImage as e:
        raise Inconsistency(f"expanded parking function left the lower image: {e}") from e


# serialization

def parse_text(text: str, k: int = 1) -> ParkingFunction:
    try:
        entries = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as e:
        raise ParseError(f"bad parking function {text.strip()!r}") from e
    if not entries:
        raise ParseError("empty parking function")
    return ParkingFunction(k, entries)


def to_text(p: ParkingFunction) -> str:
    return ",".join(map(str, p.entries))


def to_json(p: ParkingFunction) -> str:
    return json.dumps({"k": p.k, "entries": list(p.entries)})


def from_json(text: str, k: Optional[int] = None) -> ParkingFunction:
    try:
        obj = json.loads(text)
        entries = tuple(int(x) for x in obj["entries"])
        kk = int(obj.get("k", k if k is not None else 1))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad parking function JSON: {e}") from e
    if k is not None and kk != k:
        raise ParseError(f"parking function has k={kk} but k={k} was requested")
    return ParkingFunction(kk, entries)
