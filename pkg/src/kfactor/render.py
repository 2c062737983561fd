"""
Static pictures of arch diagrams: ASCII art and SVG.

The SVG uses baseline positions as user units (vertex ``v`` sits at
``(v, 0)``), so every arch path starts at ``x = a_i`` and ends at
``x = b_i``.  ``UNIT`` pixels are spent per baseline position.
"""

from __future__ import annotations

from . import archmap as am
from . import factorization as fz
from .factorization import KFactorization
from .forest import children_lists

UNIT = 40
COL = 4  # ASCII columns per baseline position


def _transpositions(f: KFactorization) -> KFactorization:
    return f if f.k == 1 else fz.lower(f)


def _levels(g: KFactorization) -> list[int]:
    """Nesting height of each arch: 1 for innermost, one more than the highest arch inside."""
    forest = am.cda(g, check=False)
    children = children_lists(forest)
    level = [1] * (g.n + 1)
    order = []
    stack = list(children[0])
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(children[u])
    for u in reversed(order):
        p = forest.parent[u - 1]
        if p:
            level[p] = max(level[p], level[u] + 1)
    return level[1:]


def render_ascii(f: KFactorization, dual: bool = False) -> str:
    g = _transpositions(f)
    m = g.n
    level = _levels(g)
    top = max(level, default=0)
    width = COL * m + 1
    rows = []
    for r in range(top, 0, -1):
        row = [" "] * width
        for (a, b), lv in zip(g.factors, level):
            if lv > r:
                row[COL * a] = row[COL * b] = "|"
        for i, ((a, b), lv) in enumerate(zip(g.factors, level), 1):
            if lv == r:
                x0, x1 = COL * a, COL * b
                row[x0:x1 + 1] = "+" + "-" * (x1 - x0 - 1) + "+"
                tag = str(i)
                mid = (x0 + x1) // 2 - len(tag) // 2
                row[mid:mid + len(tag)] = tag
        rows.append("".join(row).rstrip())
    base = [" "] * (width + 2)
    for v in range(m + 1):
        tag = str(v)
        base[COL * v:COL * v + len(tag)] = tag
    rows.append("".join(base).rstrip())
    if dual:
        layout = am.dual_layout(g)
        forest = am.cda(g, check=False)
        pairs = []
        for i in range(1, m + 1):
            p = forest.parent[i - 1]
            pairs.append(f"{i}:{layout.down[i - 1]}-{layout.down[p - 1] if p else m}")
        rows.append("dual " + " ".join(pairs))
    return "\n".join(rows) + "\n"


def _num(x: float) -> str:
    return f"{x:g}"


def render_svg(f: KFactorization, dual: bool = False) -> str:
    g = _transpositions(f)
    m = g.n
    height = m / 2 + 1
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{UNIT * (m + 1)}" height="{_num(UNIT * (height + 0.5))}" '
        f'viewBox="-0.5 {_num(-height)} {m + 1} {_num(height + 0.5)}">',
        f'<line x1="-0.25" y1="0" x2="{_num(m + 0.25)}" y2="0" stroke="#999" stroke-width="0.02"/>',
    ]
    for i, (a, b) in enumerate(g.factors, 1):
        r = (b - a) / 2
        lines.append(
            f'<path class="arch" data-label="{i}" d="M {a} 0 A {_num(r)} {_num(r)} 0 0 1 {b} 0" '
            f'fill="none" stroke="black" stroke-width="0.04"/>'
        )
    if dual:
        layout = am.dual_layout(g)
        forest = am.cda(g, check=False)
        for i in range(1, m + 1):
            p = forest.parent[i - 1]
            x0 = layout.down[i - 1] + 0.5
            x1 = (layout.down[p - 1] if p else m) + 0.5
            lo, hi = min(x0, x1), max(x0, x1)
            r = (hi - lo) / 2
            lines.append(
                f'<path class="dual" data-label="{i}" d="M {_num(lo)} 0 A {_num(r)} {_num(r)} 0 0 1 {_num(hi)} 0" '
                f'fill="none" stroke="red" stroke-width="0.03" stroke-dasharray="0.1 0.08"/>'
            )
    for v in range(m + 1):
        lines.append(f'<circle cx="{v}" cy="0" r="0.08" fill="black"/>')
        lines.append(f'<text x="{v}" y="0.35" font-size="0.3" text-anchor="middle">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
