import pytest

from kfactor import enumeration as en
from kfactor import factorization as fz
from kfactor.errors import SizeGuard


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 3), (3, 16), (4, 125)])
def test_forest_counts(n, count):
    assert sum(1 for _ in en.forests(n)) == count


@pytest.mark.parametrize("n, k, count", [(1, 4, 1), (2, 2, 5), (3, 3, 100)])
def test_k_forest_counts(n, k, count):
    assert sum(1 for _ in en.k_forests(n, k)) == count


def test_f2_is_exactly_the_three_factorizations():
    assert {fz.to_text(f) for f in en.k_factorizations(2, 1)} == {"(0 1)(0 2)", "(0 2)(1 2)", "(1 2)(0 1)"}


def test_k_factorizations_small():
    fs = list(en.k_factorizations(2, 2))
    assert len(fs) == 5
    for f in fs:
        fz.validate(f)
    assert list(en.k_factorizations(1, 3)) == [fz.canonical(1, 3)]


def test_brute_force_f2():
    assert {fz.to_text(f) for f in en.brute_force_factorizations(2, 1)} == {
        "(0 1)(0 2)", "(0 2)(1 2)", "(1 2)(0 1)"}


@pytest.mark.parametrize("n, k", [(2, 2), (1, 3), (3, 1), (4, 1), (2, 3)])
def test_brute_force_agrees(n, k):
    assert en.brute_force_factorizations(n, k) == set(en.k_factorizations(n, k))


def test_brute_force_guard():
    with pytest.raises(SizeGuard):
        en.brute_force_factorizations(4, 2)
    assert len(en.brute_force_factorizations(4, 2, override=True)) == 9 ** 3


def test_parking_functions_small():
    assert [p.entries for p in en.k_parking_functions(2, 1)] == [(0, 0), (0, 1), (1, 0)]
    assert sum(1 for _ in en.k_parking_functions(3, 1)) == 16
    assert [p.entries for p in en.k_parking_functions(1, 2)] == [(0,)]


@pytest.mark.parametrize("gen", [en.k_forests, en.k_factorizations, en.k_parking_functions])
def test_deterministic_and_duplicate_free(gen):
    a, b = list(gen(3, 2)), list(gen(3, 2))
    assert a == b
    assert len(set(a)) == len(a) == en.expected_count(3, 2)
