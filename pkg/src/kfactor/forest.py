"""
Rooted labelled forests on ``1..n`` and their edge-coloured ``k``-forest variant.

A forest is stored as a parent array with ``0`` marking a root.  Edges point
away from the roots; ``(u, v)`` means ``u`` is the parent of ``v``.  A
``k``-forest additionally carries a colour in ``0..k-1`` on every non-root
vertex, standing for the colour of the edge into that vertex.

>>> F = KForest.from_parents([2, 0], k=2, colour=[1, None])
>>> s = stats(F)
>>> s.maj, s.chr, s.maj_k, s.comaj_k
(1, 1, 2, 0)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ColourOutOfRange, CycleDetected, ForestError, ParseError, SelfLoop

__all__ = [
    "RootedForest", "KForest", "ForestStats",
    "validate", "hook_sizes", "stats", "children_lists",
    "forest_to_json", "forest_from_json", "forest_to_text", "forest_from_text",
]


@dataclass(frozen=True)
class RootedForest:
    # parent[v - 1] is the parent of vertex v, or 0 if v is a root
    parent: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def parent_of(self, v: int) -> int:
        return self.parent[v - 1]

    def roots(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.parent[v - 1] == 0]

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent, 1) if p]

    @property
    def components(self) -> int:
        return sum(1 for p in self.parent if p == 0)


@dataclass(frozen=True)
class KForest:
    forest: RootedForest
    k: int = 1
    # colour[v - 1] is the colour of the edge into v; None at roots
    colour: tuple[Optional[int], ...] = field(default=())

    def __post_init__(self):
        if not self.colour:
            object.__setattr__(
                self, "colour",
                tuple(None if p == 0 else 0 for p in self.forest.parent) if self.k == 1
                else tuple(None for _ in self.forest.parent),
            )

    @classmethod
    def from_parents(cls, parent: Sequence[int], k: int = 1,
                     colour: Optional[Sequence[Optional[int]]] = None) -> "KForest":
        return cls(RootedForest(tuple(parent)), k, tuple(colour) if colour is not None else ())

    @property
    def n(self) -> int:
        return self.forest.n

    @property
    def parent(self) -> tuple[int, ...]:
        return self.forest.parent

    def colour_of(self, v: int) -> Optional[int]:
        return self.colour[v - 1]

    def recoloured(self, colour: Sequence[Optional[int]]) -> "KForest":
        return KForest(self.forest, self.k, tuple(colour))


def _as_kforest(F) -> KForest:
    return F if isinstance(F, KForest) else KForest(F, 1)


def validate(F) -> None:
    """Raise ``SelfLoop``, ``CycleDetected`` or ``ColourOutOfRange`` if ``F`` is malformed."""
    if isinstance(F, KForest):
        forest = F.forest
    else:
        forest = F
    n = forest.n
    for v, p in enumerate(forest.parent, 1):
        if not isinstance(p, int) or not 0 <= p <= n:
            raise ForestError(f"parent of {v} is {p!r}, expected an integer in 0..{n}")
        if p == v:
            raise SelfLoop(f"vertex {v} is its own parent")
    # 0 = unvisited, 1 = on current path, 2 = known to reach a root
    state = [0] * (n + 1)
    for start in range(1, n + 1):
        path = []
        v = start
        while v and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = forest.parent[v - 1]
        if v and state[v] == 1:
            raise CycleDetected(f"parent pointers from {start} return to {v}")
        for u in path:
            state[u] = 2
    if isinstance(F, KForest):
        if F.k < 1:
            raise ColourOutOfRange(f"k must be positive, got {F.k}")
        if len(F.colour) != n:
            raise ForestError(f"expected {n} colours, got {len(F.colour)}")
        for v, (p, c) in enumerate(zip(forest.parent, F.colour), 1):
            if p == 0:
                if c is not None:
                    raise ColourOutOfRange(f"root {v} carries colour {c}")
            elif not isinstance(c, int) or not 0 <= c < F.k:
                raise ColourOutOfRange(f"colour {c!r} of vertex {v} not in 0..{F.k - 1}")


def children_lists(forest: RootedForest) -> list[list[int]]:
    """``children[u]`` for ``u`` in ``0..n``, ascending; ``children[0]`` are the roots."""
    ch: list[list[int]] = [[] for _ in range(forest.n + 1)]
    for v, p in enumerate(forest.parent, 1):
        ch[p].append(v)
    return ch


def _preorder(children: list[list[int]]) -> list[int]:
    order = []
    stack = list(reversed(children[0]))
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(reversed(children[u]))
    return order


def hook_sizes(F) -> tuple[int, ...]:
    """Hook lengths ``(h(1), ..., h(n))``."""
    forest = F.forest if isinstance(F, KForest) else F
    h = [1] * (forest.n + 1)
    for u in reversed(_preorder(children_lists(forest))):
        p = forest.parent[u - 1]
        if p:
            h[p] += h[u]
    return tuple(h[1:])


@dataclass(frozen=True)
class ForestStats:
    k: int
    # per-vertex values, indexed by vertex - 1
    h: tuple[int, ...]
    h_left: tuple[int, ...]
    h_right: tuple[int, ...]
    inv_at: tuple[int, ...]
    coinv_at: tuple[int, ...]
    components: int
    dep: int
    maj: int
    comaj: int
    inv: int
    coinv: int
    chr: int
    cochr: int

    @property
    def maj_k(self) -> int:
        return self.maj + self.chr

    @property
    def comaj_k(self) -> int:
        return self.comaj + self.cochr

    @property
    def inv_k(self) -> int:
        return self.inv + self.chr

    @property
    def coinv_k(self) -> int:
        return self.coinv + self.cochr

    def as_dict(self) -> dict:
        return {
            "k": self.k, "components": self.components, "dep": self.dep,
            "maj": self.maj, "comaj": self.comaj, "inv": self.inv, "coinv": self.coinv,
            "chr_k": self.chr, "cochr_k": self.cochr,
            "maj_k": self.maj_k, "comaj_k": self.comaj_k,
            "inv_k": self.inv_k, "coinv_k": self.coinv_k,
            "hooks": list(self.h),
        }


def stats(F) -> ForestStats:
    """Every hook-length statistic of ``F`` in one traversal."""
    F = _as_kforest(F)
    forest = F.forest
    n = forest.n
    children = children_lists(forest)
    pre = _preorder(children)

    h = [1] * (n + 1)
    hl = [0] * (n + 1)
    hr = [0] * (n + 1)
    for u in reversed(pre):
        p = forest.parent[u - 1]
        if p:
            h[p] += h[u]
            if u < p:
                hl[p] += h[u]
            else:
                hr[p] += h[u]

    # The hook of u occupies preorder slots [tin[u], tin[u] + h[u]).  Inserting
    # vertices in increasing label order into a Fenwick tree over those slots
    # counts the smaller descendants of each vertex.
    tin = [0] * (n + 1)
    for i, u in enumerate(pre, 1):
        tin[u] = i
    tree = [0] * (n + 1)
    inv_at = [0] * (n + 1)
    for u in range(1, n + 1):
        inv_at[u] = _prefix(tree, tin[u] + h[u] - 1) - _prefix(tree, tin[u])
        i = tin[u]
        while i <= n:
            tree[i] += 1
            i += i & -i
    coinv_at = [h[u] - 1 - inv_at[u] for u in range(n + 1)]

    chr_ = cochr = 0
    for v in range(1, n + 1):
        if forest.parent[v - 1]:
            c = F.colour[v - 1]
            chr_ += c * h[v]
            cochr += (F.k - 1 - c) * h[v]

    dep = sum(h[v] for v in range(1, n + 1) if forest.parent[v - 1])
    return ForestStats(
        k=F.k, h=tuple(h[1:]), h_left=tuple(hl[1:]), h_right=tuple(hr[1:]),
        inv_at=tuple(inv_at[1:]), coinv_at=tuple(coinv_at[1:]),
        components=forest.components, dep=dep,
        maj=sum(hl), comaj=sum(hr), inv=sum(inv_at), coinv=sum(coinv_at[1:]),
        chr=chr_, cochr=cochr,
    )


def _prefix(tree: list[int], i: int) -> int:
    s = 0
    while i > 0:
        s += tree[i]
        i -= i & -i
    return s


# serialization

def forest_to_json(F) -> str:
    F = _as_kforest(F)
    obj = {"n": F.n, "k": F.k, "parent": list(F.parent)}
    if F.k > 1:
        obj["colour"] = list(F.colour)
    return json.dumps(obj)


def forest_from_json(text: str, k: Optional[int] = None) -> KForest:
    try:
        obj = json.loads(text)
        parent = [int(p) for p in obj["parent"]]
        kk = int(obj.get("k", k or 1))
        colour = obj.get("colour")
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad forest JSON: {e}") from e
    if k is not None and kk != k:
        raise ParseError(f"forest has k={kk} but k={k} was requested")
    if "n" in obj and obj["n"] != len(parent):
        raise ParseError(f"n={obj['n']} but {len(parent)} parents given")
    if colour is None:
        colour = [None if p == 0 else 0 for p in parent] if kk == 1 else None
    if colour is None:
        raise ParseError("colours are required when k > 1")
    F = KForest.from_parents(parent, kk, colour)
    validate(F)
    return F


def forest_to_text(F) -> str:
    """Space-separated ``parent`` tokens, written ``parent:colour`` for edges when ``k > 1``."""
    F = _as_kforest(F)
    toks = []
    for p, c in zip(F.parent, F.colour):
        toks.append(str(p) if p == 0 or F.k == 1 else f"{p}:{c}")
    return " ".join(toks)


def forest_from_text(text: str, k: int = 1) -> KForest:
    parent, colour = [], []
    for tok in text.replace(",", " ").split():
        p, _, c = tok.partition(":")
        try:
            p = int(p)
            c = int(c) if c else None
        except ValueError as e:
            raise ParseError(f"bad forest token {tok!r}") from e
        if p != 0 and c is None:
            if k > 1:
                raise ParseError(f"edge into vertex {len(parent) + 1} has no colour")
            c = 0
        parent.append(p)
        colour.append(c)
    F = KForest.from_parents(parent, k, colour)
    validate(F)
    return F
