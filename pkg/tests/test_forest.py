from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from kfactor import enumeration as en
from kfactor import forest as fo
from kfactor.errors import ColourOutOfRange, CycleDetected, SelfLoop
from kfactor.forest import KForest, RootedForest, stats

from conftest import TAUI_PARENTS


def naive_stats(F: KForest) -> dict:
    """Recompute every statistic from descendant sets found by walking up parents."""
    n = F.n
    desc = {u: set() for u in range(1, n + 1)}
    for v in range(1, n + 1):
        u = F.parent[v - 1]
        while u:
            desc[u].add(v)
            u = F.parent[u - 1]
    h = {u: len(desc[u]) + 1 for u in desc}
    out = dict(maj=0, comaj=0, inv=0, coinv=0, chr=0, cochr=0, dep=0)
    for v in range(1, n + 1):
        u = F.parent[v - 1]
        if u:
            out["maj" if v < u else "comaj"] += h[v]
            out["dep"] += h[v]
            out["chr"] += F.colour[v - 1] * h[v]
            out["cochr"] += (F.k - 1 - F.colour[v - 1]) * h[v]
    for u in desc:
        out["inv"] += sum(1 for v in desc[u] if v < u)
        out["coinv"] += sum(1 for v in desc[u] if v > u)
    out["h"] = tuple(h[u] for u in range(1, n + 1))
    return out


def matches_naive(F):
    s, o = stats(F), naive_stats(F)
    return (s.h, s.maj, s.comaj, s.inv, s.coinv, s.chr, s.cochr, s.dep) == (
        o["h"], o["maj"], o["comaj"], o["inv"], o["coinv"], o["chr"], o["cochr"], o["dep"])


class TestValidate:
    def test_two_roots(self):
        fo.validate(RootedForest((0, 0)))

    def test_cycle(self):
        with pytest.raises(CycleDetected):
            fo.validate(RootedForest((2, 1)))

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            fo.validate(RootedForest((1,)))

    def test_colour_out_of_range(self):
        with pytest.raises(ColourOutOfRange):
            fo.validate(KForest.from_parents([2, 0], 2, [2, None]))

    def test_root_with_colour(self):
        with pytest.raises(ColourOutOfRange):
            fo.validate(KForest.from_parents([2, 0], 2, [1, 0]))

    def test_long_cycle_behind_a_tail(self):
        with pytest.raises(CycleDetected):
            fo.validate(RootedForest((2, 3, 4, 2)))


def test_hook_single_vertex():
    assert fo.hook_sizes(RootedForest((0,))) == (1,)


def test_hook_chain():
    assert fo.hook_sizes(RootedForest((2, 0))) == (1, 2)


def test_hook_sizes_of_worked_example():
    assert fo.hook_sizes(RootedForest(TAUI_PARENTS)) == (1, 2, 3, 7, 1, 3, 1, 1, 2, 1)


def test_stats_of_worked_example():
    s = stats(RootedForest(TAUI_PARENTS))
    assert (s.maj, s.comaj) == (7, 5)


def test_stats_small_coloured():
    F = KForest.from_parents([2, 0], 2, [1, None])
    s = stats(F)
    assert (s.maj, s.chr, s.maj_k, s.comaj_k) == (1, 1, 2, 0)
    assert matches_naive(F)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_all_roots_has_zero_stats(k):
    s = stats(KForest(RootedForest((0, 0, 0, 0)), k, (None,) * 4))
    assert (s.dep, s.maj, s.comaj, s.inv, s.coinv, s.chr, s.cochr) == (0,) * 7


def test_per_vertex_identities():
    for F in en.forests(5):
        s = stats(F)
        for i in range(F.n):
            assert s.h[i] == s.h_left[i] + s.h_right[i] + 1
            assert s.h[i] == s.inv_at[i] + s.coinv_at[i] + 1


@pytest.mark.parametrize("n", range(0, 7))
def test_depth_splits(n):
    for F in en.forests(n):
        s = stats(F)
        assert s.maj + s.comaj == s.dep
        assert s.inv + s.coinv == s.dep


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (3, 3)])
def test_matches_naive_oracle_and_chromatic_split(n, k):
    for F in en.k_forests(n, k):
        s = stats(F)
        assert matches_naive(F)
        assert s.chr + s.cochr == (k - 1) * s.dep


def test_k1_chromatic_terms_vanish():
    for F in en.forests(5):
        s = stats(F)
        assert s.chr == s.cochr == 0
        assert (s.maj_k, s.inv_k) == (s.maj, s.inv)


@pytest.mark.parametrize("n", range(1, 6))
def test_reversing_labels_swaps_inv_and_coinv(n):
    def flip(F):
        parent = [0] * n
        for v, p in enumerate(F.parent, 1):
            parent[n - v] = n + 1 - p if p else 0
        return RootedForest(tuple(parent))

    for F in en.forests(n):
        s, t = stats(F), stats(flip(F))
        assert (s.inv, s.coinv) == (t.coinv, t.inv)
        assert (s.maj, s.comaj) == (t.comaj, t.maj)


@pytest.mark.parametrize("n, k", [(4, 1), (3, 2)])
def test_maj_and_inv_jointly_equidistributed(n, k):
    ss = [stats(F) for F in en.k_forests(n, k)]
    assert Counter((s.maj_k, s.comaj_k) for s in ss) == Counter((s.inv_k, s.coinv_k) for s in ss)


@st.composite
def kforests(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, 4))
    # parent labels drawn from a random order guarantee acyclicity
    order = draw(st.permutations(range(1, n + 1)))
    parent = [0] * n
    colour = [None] * n
    for pos, v in enumerate(order):
        if pos and draw(st.booleans()):
            parent[v - 1] = order[draw(st.integers(0, pos - 1))]
            colour[v - 1] = draw(st.integers(0, k - 1))
    return KForest.from_parents(parent, k, colour)


@given(kforests())
def test_random_forests_match_oracle(F):
    fo.validate(F)
    assert matches_naive(F)


@given(kforests())
def test_json_and_text_round_trip(F):
    assert fo.forest_from_json(fo.forest_to_json(F)) == F
    assert fo.forest_from_text(fo.forest_to_text(F), F.k) == F


def test_json_shape():
    F = KForest.from_parents([2, 0], 2, [1, None])
    assert fo.forest_to_json(F) == '{"n": 2, "k": 2, "parent": [2, 0], "colour": [1, null]}'
    assert fo.forest_to_json(RootedForest((2, 0))) == '{"n": 2, "k": 1, "parent": [2, 0]}'


def test_deep_chain_does_not_recurse():
    n = 20000
    F = RootedForest(tuple(range(2, n + 1)) + (0,))
    s = stats(F)
    assert s.h[-1] == n
    assert s.dep == n * (n - 1) // 2
    assert s.inv == n * (n - 1) // 2
