import itertools

import pytest
from hypothesis import given, strategies as st

from blockade import seqcore
from blockade.errors import BudgetExceeded, ParameterError
from blockade.seqcore import (
    binary_decomposition,
    blocker_max_partite,
    enumerate_sigma,
    f_value,
    index_of,
    n_explicit,
    n_star,
    n_table,
    word_from_index,
)
from blockade.words import ALPHA, EMPTY, OMEGA, complement, word

from conftest import nested, partite_edges


def brute_f(w, n, r):
    """|F_r(w)| by enumerating [n]^r with anchors at vertex 1."""
    if w == ALPHA:
        return 0
    if w == OMEGA:
        return n**r
    return sum(nested(w.symbols, lambda j: e[j - 1] == 1) for e in partite_edges(n, r))


def test_sigma_r2():
    assert enumerate_sigma(2) == [ALPHA, word("&"), EMPTY, word("|"), OMEGA]


def test_sigma_r1():
    assert enumerate_sigma(1) == [ALPHA, EMPTY, OMEGA]


@pytest.mark.parametrize("r", [0, -1])
def test_sigma_rejects_bad_r(r):
    with pytest.raises(ParameterError):
        enumerate_sigma(r)


@pytest.mark.parametrize("r", range(1, 9))
def test_sigma_size_and_in_order_rule(r):
    ws = enumerate_sigma(r)
    assert len(ws) == 2**r + 1
    pos = {w: i for i, w in enumerate(ws)}
    # (b, AND, ...) < b < (b, OR, ...)
    for w in ws[1:-1]:
        for v in ws[1:-1]:
            if len(v) > len(w) and v.symbols[: len(w)] == w.symbols:
                assert (pos[v] < pos[w]) == (v.symbols[len(w)] == "&")


def test_sigma_r3_order_is_size_order():
    sizes = [brute_f(w, 3, 3) for w in enumerate_sigma(3)]
    assert sizes == sorted(sizes) and len(set(sizes)) == len(sizes)


def test_word_from_index_examples():
    assert word_from_index(13, 6) == word("&&||&")
    assert word_from_index(0, 4) == ALPHA
    assert word_from_index(16, 4) == OMEGA
    for r in range(1, 7):
        for p in range(r):
            assert word_from_index(2**p, r) == word("&" * (r - p - 1))


@pytest.mark.parametrize("i", [-1, 17])
def test_word_from_index_range(i):
    with pytest.raises(ParameterError):
        word_from_index(i, 4)


def test_index_of_examples():
    assert index_of(EMPTY, 2) == 2
    assert index_of(ALPHA, 5) == 0
    assert index_of(word("&&||&"), 6) == 13
    with pytest.raises(ParameterError):
        index_of(word("&&&"), 3)


@pytest.mark.parametrize("r", range(1, 11))
def test_index_roundtrip(r):
    for i, w in enumerate(enumerate_sigma(r)):
        assert index_of(w, r) == i
        assert word_from_index(i, r) == w
        assert index_of(complement(w), r) == 2**r - i


@given(st.integers(min_value=1, max_value=2**40))
def test_binary_decomposition(i):
    ks = binary_decomposition(i)
    assert sum(2**k for k in ks) == i
    assert all(a > b for a, b in zip(ks, ks[1:]))


def test_f_value_examples():
    for n in range(2, 6):
        for r in range(1, 6):
            assert f_value(EMPTY, n, r) == n ** (r - 1)
            assert f_value(word("&" * (r - 1)), n, r) == 1
    assert f_value(word("|"), 3, 2) == 5


@pytest.mark.parametrize("n,r", [(2, 1), (2, 4), (3, 3), (4, 2), (3, 4)])
def test_f_value_against_enumeration(n, r):
    for w in enumerate_sigma(r):
        assert f_value(w, n, r) == brute_f(w, n, r)


def test_f_value_rejects_n1():
    with pytest.raises(ParameterError):
        f_value(EMPTY, 1, 3)


def test_f_value_is_exact_beyond_64_bits():
    assert f_value(OMEGA, 10, 30) == 10**30
    assert f_value(word("|" * 29), 10, 30) == 10**30 - 9**30


def test_n_table_examples():
    assert n_table(3, 3).values == [0, 1, 3, 5, 9, 11, 15, 19, 27]
    assert n_table(2, 2).values == [0, 1, 2, 3, 4]
    t = n_table(4, 5)
    assert t.entries[0] == (0, ALPHA, 0) and t.entries[-1] == (32, OMEGA, 4**5)
    assert t[16] == 4**4


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("r", range(2, 8))
def test_n_table_prefix(n, r):
    assert n_table(n, r).values[: 2 ** (r - 1) + 1] == n_table(n, r - 1).values


def test_n_table_budget(monkeypatch):
    monkeypatch.setattr(seqcore, "TABLE_BUDGET_BITS", 4)
    with pytest.raises(BudgetExceeded):
        n_table(2, 5)


def test_n_explicit_examples():
    assert n_explicit(5, 3, 3) == 11
    assert n_explicit(0, 7, 4) == 0
    for p in range(6):
        assert n_explicit(2**p, 5, 6) == 5**p


def test_n_explicit_far_beyond_tables():
    # N(2^p + i) = n^p + (n-1) N(i) at r = 200
    n, r = 7, 200
    for p, i in [(150, 3), (199, 2**120 + 5)]:
        assert n_explicit(2**p + i, n, r) == n**p + (n - 1) * n_explicit(i, n, r)


def test_n_star_examples():
    assert n_star(2, 3, 3) == 2
    assert n_star(27, 3, 3) == 8
    assert n_star(1, 3, 3) == 1
    assert n_star(0, 3, 3) == 0
    with pytest.raises(ParameterError):
        n_star(28, 3, 3)


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3), (4, 2)])
def test_n_star_definition(n, r):
    N = n_table(n, r).values
    for t in range(1, n**r + 1):
        q = n_star(t, n, r)
        assert N[q - 1] < t <= N[q]


def test_blocker_max_examples():
    assert blocker_max_partite(1, 3, 3).value == 19
    assert blocker_max_partite(9, 3, 3).value == 9
    for n, r in [(2, 2), (3, 4)]:
        assert blocker_max_partite(0, n, r).value == n**r
    with pytest.raises(ParameterError):
        blocker_max_partite(-1, 3, 3)


def test_blocker_max_witness():
    ans = blocker_max_partite(4, 3, 3)
    assert brute_f(ans.word, 3, 3) >= 4
    assert ans.blocker_word == complement(ans.word)
    assert brute_f(ans.blocker_word, 3, 3) == ans.value


@given(st.integers(2, 6), st.integers(1, 9), st.data())
def test_blocker_max_antitone(n, r, data):
    a = data.draw(st.integers(0, n**r))
    b = data.draw(st.integers(a, n**r))
    assert blocker_max_partite(b, n, r).value <= blocker_max_partite(a, n, r).value


@given(st.integers(2, 6), st.integers(1, 9), st.data())
def test_b_of_b_at_least_t(n, r, data):
    t = data.draw(st.integers(0, n**r))
    assert blocker_max_partite(blocker_max_partite(t, n, r).value, n, r).value >= t
