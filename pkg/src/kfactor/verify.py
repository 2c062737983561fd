"""
Exhaustive checks of the bijections and identities, one report per suite and
grid cell.

Each ``check_*`` function walks one ``(n, k)`` cell and returns a `Report`
listing the first few counterexamples, if any.  All arithmetic is exact.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Optional, Sequence

from . import archmap as am
from . import enumeration as en
from . import factorization as fz
from . import parking as pk
from .errors import KFactorError
from .factorization import KFactorization
from .forest import stats

__all__ = [
    "Report", "DEFAULT_GRID", "SUITES",
    "check_main_theorem", "check_distributions", "check_hook_identities",
    "check_roundtrips", "check_counts", "run_suite", "run_grid",
]

# k=1 with n <= 6, k=2 with n <= 4, k=3 with n <= 3
DEFAULT_GRID = (
    [(n, 1) for n in range(1, 7)]
    + [(n, 2) for n in range(1, 5)]
    + [(n, 3) for n in range(1, 4)]
)

MAX_FAILURES = 10


@dataclass
class Report:
    suite: str
    n: int
    k: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, check: str, **detail) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append({"check": check, **{k: _jsonable(v) for k, v in detail.items()}})

    def to_dict(self) -> dict:
        return {"suite": self.suite, "n": self.n, "k": self.k, "checked": self.checked,
                "passed": self.passed, "failure_count": self.failure_count,
                "failures": self.failures}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite} n={self.n} k={self.k} checked={self.checked}"
                 f" failures={self.failure_count}"]
        for f in self.failures:
            lines.append("  " + json.dumps(f))
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, KFactorization):
        return fz.to_text(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(a): _jsonable(b) for a, b in v.items()}
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return str(v)


def _equal(report: Report, check: str, obj, **values) -> None:
    (a_name, a), (b_name, b) = values.items()
    if a != b:
        report.fail(check, object=obj, **{a_name: a, b_name: b})


def check_main_theorem(n: int, k: int,
                       factorizations: Optional[Iterable[KFactorization]] = None) -> Report:
    """Per-element statistic identities for ``F = jcdal(f)`` over ``F_n^k``."""
    report = Report("main", n, k)
    if factorizations is None:
        factorizations = en.k_factorizations(n, k)
    for f in factorizations:
        report.checked += 1
        try:
            F = am.jcdal(f)
            F_up = am.jcdal_via_upper(f, check=False)
        except KFactorError as e:
            report.fail("jcdal", object=f, error=str(e))
            continue
        a = fz.area_stats(f)
        s = stats(F)
        _equal(report, "area_k = k*maj_k", f, area_k=a.area, k_maj_k=k * s.maj_k)
        _equal(report, "coarea_k = k*comaj_k", f, coarea_k=a.coarea, k_comaj_k=k * s.comaj_k)
        _equal(report, "semiarea_k = k*maj", f, semiarea_k=a.semiarea, k_maj=k * s.maj)
        _equal(report, "cosemiarea_k = k*comaj", f, cosemiarea_k=a.cosemiarea, k_comaj=k * s.comaj)
        _equal(report, "a^k - a^0 = k*h", f,
               differences=[c[-1] - c[0] for c in f.factors], k_hooks=[k * h for h in s.h])
        for name, value in a.as_dict().items():
            if value % k:
                report.fail(f"k divides {name}", object=f, value=value)
        _equal(report, "upper route = lower route", f,
               lower_route=(F.parent, F.colour), upper_route=(F_up.parent, F_up.colour))
        _check_arch_hooks(report, fz.lower(f))
    return report


def _check_arch_hooks(report: Report, g: KFactorization) -> None:
    """Hook lengths read off arch endpoints, and the consecutive-label criterion."""
    forest = am.cda(g, check=False)
    s = stats(forest)
    layout = am.dual_layout(g)
    for i in range(g.n):
        l, r, d = layout.left[i], layout.right[i], layout.down[i]
        if (s.h[i], s.h_left[i], s.h_right[i]) != (r - l, d - l, r - d - 1):
            report.fail("hook lengths from arch layout", object=g, edge=i + 1,
                        hooks=[s.h[i], s.h_left[i], s.h_right[i]],
                        layout=[r - l, d - l, r - d - 1])
    for i in range(1, g.n):
        same_start = g.factors[i - 1][0] == g.factors[i][0]
        is_child = forest.parent[i - 1] == i + 1
        if same_start != is_child:
            report.fail("a_i = a_(i+1) iff i child of i+1", object=g, edge=i,
                        same_start=same_start, is_child=is_child)


def check_distributions(n: int, k: int) -> Report:
    """Multiset equalities between factorization, forest and parking statistics."""
    report = Report("dist", n, k)
    forest_stats = [stats(F) for F in en.k_forests(n, k)]
    fact_stats = [fz.area_stats(f) for f in en.k_factorizations(n, k)]
    parks = list(en.k_parking_functions(n, k))
    report.checked = len(forest_stats) + len(fact_stats) + len(parks)

    inv_k = Counter(s.inv_k for s in forest_stats)
    joint_inv_k = Counter((s.inv_k, s.coinv_k) for s in forest_stats)
    joint_inv = Counter((s.inv, s.coinv) for s in forest_stats)
    comparisons = [
        ("(area_k, coarea_k)/k over F ~ (inv_k, coinv_k) over R",
         Counter((a.area // k, a.coarea // k) for a in fact_stats), joint_inv_k),
        ("(semiarea_k, cosemiarea_k)/k over F ~ (inv, coinv) over R",
         Counter((a.semiarea // k, a.cosemiarea // k) for a in fact_stats), joint_inv),
        ("disp_k over P ~ inv_k over R", Counter(pk.disp(p) for p in parks), inv_k),
        ("(maj_k, comaj_k) ~ (inv_k, coinv_k) over R",
         Counter((s.maj_k, s.comaj_k) for s in forest_stats), joint_inv_k),
    ]
    for check, left, right in comparisons:
        if left != right:
            report.fail(check, only_left=_multiset_diff(left, right),
                        only_right=_multiset_diff(right, left))
    return report


def _multiset_diff(a: Counter, b: Counter) -> list:
    return sorted((list(x) if isinstance(x, tuple) else x, c) for x, c in (a - b).items())[:MAX_FAILURES]


def rising_factorial(z, n: int):
    return prod((z + i for i in range(n)), start=Fraction(1))


def check_hook_identities(n: int, k: int) -> Report:
    report = Report("hooks", n, k)
    forests = [stats(F) for F in en.forests(n)]
    for z in range(1, n + 2):
        total = sum(Fraction(z) ** s.components / prod(s.h, start=1) for s in forests)
        report.checked += 1
        if total != rising_factorial(z, n):
            report.fail("sum z^c / prod h = z(z+1)...(z+n-1)", z=z, lhs=total,
                        rhs=rising_factorial(z, n))

    total = sum(Fraction(1, prod((c[-1] - c[0] for c in f.factors), start=1))
                for f in en.k_factorizations(n, k))
    report.checked += 1
    expected = Fraction(prod((i * k + 1 for i in range(1, n)), start=1), k ** n)
    if total != expected:
        report.fail("sum 1/prod(a^k - a^0) = (k+1)...((n-1)k+1)/k^n", lhs=total, rhs=expected)
    if k == 1 and total != factorial(n):
        report.fail("sum 1/prod(b - a) = n!", lhs=total, rhs=factorial(n))
    return report


def check_roundtrips(n: int, k: int) -> Report:
    report = Report("roundtrip", n, k)
    facts = []
    for F in en.k_forests(n, k):
        report.checked += 1
        f = am.jcdal_inverse(F)
        facts.append(f)
        try:
            fz.validate(f)
        except KFactorError as e:
            report.fail("jcdal_inverse yields a factorization", object=F.parent, error=str(e))
            continue
        back = am.jcdal(f, check=False)
        _equal(report, "jcdal . jcdal_inverse = id", f,
               forest=(F.parent, F.colour), image=(back.parent, back.colour))
        if am.jcdal_inverse(back) != f:
            report.fail("jcdal_inverse . jcdal = id", object=f)
        g = fz.lower(f)
        if fz.contract_lower(g, k) != f:
            report.fail("contract_lower . lower = id", object=f)
        Fs = am.cda(g, check=False)
        if am.cda_inverse(Fs) != g:
            report.fail("cda_inverse . cda = id", object=g)
        p = pk.L(f)
        if pk.L_inverse(p) != f:
            report.fail("L_inverse . L = id", object=f, parking=p.entries)
    if len(set(facts)) != len(facts):
        report.fail("k_factorizations is duplicate-free", distinct=len(set(facts)), listed=len(facts))
    for p in en.k_parking_functions(n, k):
        report.checked += 1
        if pk.L(pk.L_inverse(p)) != p:
            report.fail("L . L_inverse = id", parking=p.entries)
    if k == 1:
        for F in en.forests(n):
            report.checked += 1
            if am.cda(am.cda_inverse(F), check=False) != F:
                report.fail("cda . cda_inverse = id", forest=F.parent)
    if k * n <= en.BRUTE_FORCE_LIMIT:
        report.checked += 1
        oracle = en.brute_force_factorizations(n, k)
        if oracle != set(facts):
            report.fail("bijective enumeration = brute force",
                        only_bijective=sorted(map(fz.to_text, set(facts) - oracle))[:MAX_FAILURES],
                        only_brute_force=sorted(map(fz.to_text, oracle - set(facts)))[:MAX_FAILURES])
    return report


def check_counts(n: int, k: int) -> Report:
    report = Report("counts", n, k)
    expected = en.expected_count(n, k)
    for name, items in [("forests", en.k_forests(n, k)),
                        ("factorizations", en.k_factorizations(n, k)),
                        ("parking functions", en.k_parking_functions(n, k))]:
        found = len(set(items))
        report.checked += 1
        if found != expected:
            report.fail(f"|{name}| = (kn+1)^(n-1)", found=found, expected=expected)
    return report


SUITES = {
    "main": check_main_theorem,
    "dist": check_distributions,
    "hooks": check_hook_identities,
    "roundtrip": check_roundtrips,
    "counts": check_counts,
}


def run_suite(suite: str, n: int, k: int) -> list[Report]:
    names = list(SUITES) if suite == "all" else [suite]
    return [SUITES[name](n, k) for name in names]


def _run_cell(args) -> list[Report]:
    return run_suite(*args)


def run_grid(suite: str, cells: Sequence[tuple[int, int]], jobs: int = 1) -> list[Report]:
    """Run ``suite`` on every cell, in cell order regardless of ``jobs``."""
    tasks = [(suite, n, k) for n, k in cells]
    if jobs <= 1:
        results = map(_run_cell, tasks)
        return [r for rs in results for r in rs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [r for rs in pool.map(_run_cell, tasks) for r in rs]
