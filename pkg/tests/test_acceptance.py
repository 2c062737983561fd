"""Exit criteria.  Every equality is exact; each test also enforces its runtime bound.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per criterion
in the terminal summary.
"""

import io
import time
from contextlib import contextmanager

import pytest

from kfactor import archmap as am
from kfactor import cli
from kfactor import enumeration as en
from kfactor import factorization as fz
from kfactor import verify
from kfactor.forest import stats

from conftest import GENK, TAUI

GRID = verify.DEFAULT_GRID
ORACLE_CELLS = [(2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2), (1, 3), (2, 3)]


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


def assert_reports(reports):
    bad = [r.to_text() for r in reports if not r.passed]
    assert not bad, "\n".join(bad)


def test_criterion_01_f2_reproduction():
    with within(1):
        got = {fz.to_text(f) for f in en.k_factorizations(2, 1)}
    assert got == {"(0 1)(0 2)", "(0 2)(1 2)", "(1 2)(0 1)"}


def test_criterion_02_counts():
    with within(120):
        for n, k in GRID:
            expected = (k * n + 1) ** (n - 1)
            assert len(set(en.k_forests(n, k))) == expected, (n, k)
            assert len(set(en.k_factorizations(n, k))) == expected, (n, k)
            assert len(set(en.k_parking_functions(n, k))) == expected, (n, k)


def test_criterion_03_worked_k1_example():
    with within(1):
        f = fz.parse_text(TAUI)
        a = fz.area_stats(f)
        F = am.cda(f)
        s = stats(F)
        layout = am.dual_layout(f)
    assert (a.area, a.coarea) == (7, 5)
    assert (s.maj, s.comaj) == (7, 5)
    assert s.h == tuple(b - a for a, b in f.factors) == (1, 2, 3, 7, 1, 3, 1, 1, 2, 1)
    assert layout.down[4 - 1] == 7


def test_criterion_04_worked_k2_example():
    with within(1):
        f = fz.parse_text(GENK)
        a = fz.area_stats(f)
        Fstar = stats(am.cda(fz.lower(f)))
        F = stats(am.jcdal(f))
    assert (a.area, a.cosemiarea, a.semiarea, a.coarea) == (34, 12, 16, 22)
    assert (Fstar.maj, Fstar.comaj) == (44, 12)
    assert (F.maj_k, F.comaj, F.maj, F.comaj_k) == (17, 6, 8, 11)
    a8 = f.factors[8 - 1]
    assert a8[-1] - a8[0] == 8 == 2 * F.h[8 - 1]


def test_criterion_05_main_theorem_exhaustive():
    with within(180):
        reports = [verify.check_main_theorem(n, k) for n, k in GRID]
    assert_reports(reports)
    assert sum(r.checked for r in reports) == sum(en.expected_count(n, k) for n, k in GRID)


def test_criterion_06_round_trips_exhaustive():
    with within(180):
        reports = [verify.check_roundtrips(n, k) for n, k in GRID]
    assert_reports(reports)


def test_criterion_07_oracle_equivalence():
    with within(120):
        for n, k in ORACLE_CELLS:
            assert n * k <= en.BRUTE_FORCE_LIMIT
            assert en.brute_force_factorizations(n, k) == set(en.k_factorizations(n, k)), (n, k)


def test_criterion_08_distribution_identities():
    with within(120):
        reports = [verify.check_distributions(n, k) for n, k in GRID]
    assert_reports(reports)


def test_criterion_09_hook_identities():
    with within(120):
        reports = [verify.check_hook_identities(n, k) for n, k in GRID]
    assert_reports(reports)


def _cli(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_criterion_10_cli_contract(monkeypatch, capsys):
    assert _cli(monkeypatch, capsys, ["convert", "--from", "fact", "--to", "parking", "--k", "2"], GENK) == (
        0, "0,6,13,5,18,0,10,5,2,14\n", "")
    code, out, err = _cli(monkeypatch, capsys, ["stats", "--type", "fact", "--k", "1"], TAUI)
    assert code == 0 and err == ""
    assert out.startswith("k=1\nn=10\narea=7\ncoarea=5\n")
    assert _cli(monkeypatch, capsys, ["count", "--n", "2", "--k", "1"]) == (0, "3\n", "")
    # invalid object, then unreadable input
    assert _cli(monkeypatch, capsys, ["stats", "--type", "fact"], "(0 1)(1 2)")[0] == 1
    assert _cli(monkeypatch, capsys, ["stats", "--type", "fact"], "(0 1")[0] == 2
