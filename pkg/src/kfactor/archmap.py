"""
Arch diagrams, their planar duals, and the bijection from ``k``-factorizations
to ``k``-forests.

For a factorization ``(a_1 b_1)...(a_m b_m)`` into transpositions, arch ``i``
joins baseline points ``a_i < b_i`` and has span ``[a_i, b_i)``.  Spans of a
minimal factorization are pairwise nested or disjoint, and the forest
``cda(f)`` is the Hasse diagram of span inclusion: the parent of ``i`` is the
arch whose span covers ``span(i)``.  The dual tree lives on the half-integer
points between baseline vertices; ``DualLayout.down[i - 1]`` records the
baseline slot of the lower endpoint of dual edge ``i``.

For ``k > 1`` each factor is first split into ``k`` transpositions (the lower
decomposition), the transposition forest is built with ``cda``, and each
length-``k`` path ``j_1 -> ... -> j_k`` is merged into one vertex ``j``.  The
subscripted label ``j_i`` is encoded as the integer ``(j - 1) * k + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import factorization as fz
from .errors import Inconsistency
from .factorization import KFactorization
from .forest import KForest, RootedForest, children_lists

__all__ = [
    "DualLayout",
    "cda", "cda_inverse", "dual_layout", "layout_positions",
    "join_lower", "join_upper", "unjoin",
    "jcdal", "jcdal_inverse", "jcdal_via_upper",
]


@dataclass(frozen=True)
class DualLayout:
    # indexed by edge label - 1
    left: tuple[int, ...]
    right: tuple[int, ...]
    down: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.left)

    def check(self) -> None:
        """Raise ``Inconsistency`` unless spans are noncrossing and ``down`` is well placed."""
        m = self.m
        for i in range(m):
            if not self.left[i] <= self.down[i] < self.right[i]:
                raise Inconsistency(f"dual vertex of edge {i + 1} lies outside its span")
        if sorted(self.down) != list(range(m)):
            raise Inconsistency("dual lower endpoints are not a permutation of 0..m-1")
        spans = sorted(zip(self.left, self.right), key=lambda s: (s[0], -s[1]))
        stack: list[tuple[int, int]] = []
        for a, b in spans:
            while stack and stack[-1][1] <= a:
                stack.pop()
            if stack and stack[-1][1] < b:
                raise Inconsistency(f"span [{a}, {b}) crosses [{stack[-1][0]}, {stack[-1][1]})")
            stack.append((a, b))


def _span_parents(f: KFactorization) -> list[int]:
    """Cover relation of arch spans, by one sweep over spans sorted by (left, -right)."""
    order = sorted(range(f.n), key=lambda t: (f.factors[t][0], -f.factors[t][1]))
    parent = [0] * f.n
    stack: list[int] = []
    for t in order:
        a, b = f.factors[t]
        while stack and f.factors[stack[-1]][1] <= a:
            stack.pop()
        if stack:
            top_b = f.factors[stack[-1]][1]
            if top_b < b:
                raise Inconsistency(f"arches {stack[-1] + 1} and {t + 1} cross")
            parent[t] = stack[-1] + 1
        stack.append(t)
    return parent


def cda(f: KFactorization, check: bool = True) -> RootedForest:
    """Forest of arch-span covers of a factorization into transpositions."""
    if f.k != 1:
        raise ValueError("cda expects a factorization into transpositions; use jcdal for k > 1")
    if check:
        fz.validate(f)
    return RootedForest(tuple(_span_parents(f)))


def layout_positions(forest: RootedForest) -> list[int]:
    """
    Baseline slot of every dual vertex, indexed by forest vertex (slot of the
    dual root stored at index 0, always ``n``).

    At a vertex entered by edge ``i`` the slots run: subtrees of children
    smaller than ``i`` in decreasing order, the vertex itself, then subtrees of
    children larger than ``i`` in decreasing order.  The dual root behaves as
    if entered by an edge larger than every label.
    """
    n = forest.n
    children = children_lists(forest)
    pos = [0] * (n + 1)
    nxt = 0
    # ("v", u) expands u; ("e", u) assigns u its slot
    stack: list[tuple[str, int]] = [("v", 0)]
    while stack:
        kind, u = stack.pop()
        if kind == "e":
            pos[u] = nxt
            nxt += 1
            continue
        label = n + 1 if u == 0 else u
        small = [c for c in children[u] if c < label]
        large = [c for c in children[u] if c > label]
        # pushed in reverse of visiting order
        for c in large:
            stack.append(("v", c))
        stack.append(("e", u))
        for c in small:
            stack.append(("v", c))
    return pos


def _subtree_extents(forest: RootedForest, pos: list[int]) -> tuple[list[int], list[int]]:
    n = forest.n
    lo = pos[:]
    hi = pos[:]
    children = children_lists(forest)
    order = []
    stack = list(children[0])
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u])
    for u in reversed(order):
        p = forest.parent[u - 1]
        if p:
            lo[p] = min(lo[p], lo[u])
            hi[p] = max(hi[p], hi[u])
    return lo, hi


def cda_inverse(F) -> KFactorization:
    """The factorization whose arch-span forest is ``F`` (colours ignored)."""
    forest = F.forest if isinstance(F, KForest) else F
    pos = layout_positions(forest)
    lo, hi = _subtree_extents(forest, pos)
    return KFactorization(1, tuple((lo[i], hi[i] + 1) for i in range(1, forest.n + 1)))


def dual_layout(f: KFactorization) -> DualLayout:
    """Arch endpoints and dual lower endpoints for a factorization into transpositions."""
    forest = cda(f)
    pos = layout_positions(forest)
    lo, hi = _subtree_extents(forest, pos)
    for i, (a, b) in enumerate(f.factors, 1):
        if (lo[i], hi[i] + 1) != (a, b):
            raise Inconsistency(f"dual hook of edge {i} spans [{lo[i]}, {hi[i] + 1}), arch is [{a}, {b})")
    return DualLayout(
        left=tuple(c[0] for c in f.factors),
        right=tuple(c[1] for c in f.factors),
        down=tuple(pos[1:]),
    )


# joining paths of the transposition forest

def join_lower(fstar: RootedForest, k: int) -> KForest:
    """Merge paths ``j_1 -> j_2 -> ... -> j_k`` (``j_i`` a child of ``j_{i+1}``)."""
    if fstar.n % k:
        raise Inconsistency(f"{fstar.n} vertices do not split into paths of {k}")
    n = fstar.n // k
    parent = [0] * n
    colour: list[Optional[int]] = [None] * n
    for j in range(1, n + 1):
        base = (j - 1) * k
        for i in range(1, k):
            if fstar.parent[base + i - 1] != base + i + 1:
                raise Inconsistency(f"vertex {j}_{i} is not a child of {j}_{i + 1}")
        p = fstar.parent[base + k - 1]
        if p:
            r, s = divmod(p - 1, k)
            parent[j - 1] = r + 1
            colour[j - 1] = k - (s + 1)
    return KForest(RootedForest(tuple(parent)), k, tuple(colour))


def join_upper(fstar: RootedForest, k: int) -> KForest:
    """Merge paths ``j_k -> ... -> j_1`` (``j_{i+1}`` a child of ``j_i``); same colour rule."""
    if fstar.n % k:
        raise Inconsistency(f"{fstar.n} vertices do not split into paths of {k}")
    n = fstar.n // k
    parent = [0] * n
    colour: list[Optional[int]] = [None] * n
    for j in range(1, n + 1):
        base = (j - 1) * k
        for i in range(1, k):
            if fstar.parent[base + i] != base + i:
                raise Inconsistency(f"vertex {j}_{i + 1} is not a child of {j}_{i}")
        p = fstar.parent[base]
        if p:
            r, s = divmod(p - 1, k)
            parent[j - 1] = r + 1
            colour[j - 1] = k - (s + 1)
    return KForest(RootedForest(tuple(parent)), k, tuple(colour))


def unjoin(F: KForest) -> RootedForest:
    """Split each vertex of ``F`` back into a path, inverting `join_lower`."""
    k = F.k
    parent = [0] * (F.n * k)
    for j in range(1, F.n + 1):
        base = (j - 1) * k
        for i in range(1, k):
            parent[base + i - 1] = base + i + 1
        p = F.parent[j - 1]
        if p:
            parent[base + k - 1] = (p - 1) * k + (k - F.colour[j - 1])
    return RootedForest(tuple(parent))


def jcdal(f: KFactorization, check: bool = True) -> KForest:
    """The bijection ``join . cda . lower`` from ``k``-factorizations to ``k``-forests."""
    if check:
        fz.validate(f)
    return join_lower(cda(fz.lower(f), check=False), f.k)


def jcdal_via_upper(f: KFactorization, check: bool = True) -> KForest:
    """Same map, routed through the upper decomposition."""
    if check:
        fz.validate(f)
    return join_upper(cda(fz.upper(f), check=False), f.k)


def jcdal_inverse(F: KForest) -> KFactorization:
    return fz.contract_lower(cda_inverse(unjoin(F)), F.k)
