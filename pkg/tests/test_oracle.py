import itertools
from math import comb

import pytest

from blockade import oracle
from blockade.errors import BudgetExceeded, ParameterError
from blockade.hyper import GroundSpace, Hypergraph, blocker, matching_number
from blockade.oracle import (
    OracleResult,
    SearchBudget,
    brute_blocker_max,
    brute_extremal_matching_number,
    brute_min_shadow,
    min_cascade_shadow,
    rainbow_counterexample_search,
)
from blockade.seqcore import blocker_max_partite
from blockade.setfam import blocker_max_subsets


def plain_blocker_max(space, t):
    """No masks, no pruning: every t-subset, blocker by definition."""
    best = None
    for combo in itertools.combinations(space.edges(), t):
        v = sum(all(space.meets(e, f) for f in combo) for e in space.edges())
        best = v if best is None else max(best, v)
    return best


def test_budget_validation(monkeypatch):
    with pytest.raises(ParameterError):
        SearchBudget(max_families=0)
    monkeypatch.setenv(oracle.BUDGET_ENV, "7")
    assert SearchBudget.from_env().max_universe_bits == 7
    assert SearchBudget.from_env(max_universe_bits=9).max_universe_bits == 9


def test_blocker_max_examples():
    res = brute_blocker_max(GroundSpace.partite(2, 2), 2)
    assert res.value == 2 and res.exhaustive and not res.reduced
    assert res.witness.edges == {(1, 1), (1, 2)}
    assert brute_blocker_max(GroundSpace.partite(3, 3), 1).value == 19
    assert brute_blocker_max(GroundSpace.subsets(5, 2), 3).value == 4


@pytest.mark.parametrize("space", [GroundSpace.partite(2, 2), GroundSpace.partite(3, 2), GroundSpace.subsets(4, 2)])
def test_blocker_max_against_plain_enumeration(space):
    for t in range(space.size + 1):
        res = brute_blocker_max(space, t)
        assert res.value == plain_blocker_max(space, t)
        assert len(res.witness) == t
        assert len(blocker(res.witness)) == res.value


@pytest.mark.parametrize("space", [GroundSpace.partite(2, 3), GroundSpace.subsets(5, 2)])
def test_monotone_in_t_and_closed_form(space):
    values = [brute_blocker_max(space, t).value for t in range(space.size + 1)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    closed = blocker_max_partite if space.kind == "partite" else blocker_max_subsets
    assert values == [closed(t, space.n, space.r).value for t in range(space.size + 1)]


def test_witness_is_least_mask():
    space = GroundSpace.partite(2, 3)
    for t in range(1, 5):
        res = brute_blocker_max(space, t)
        least = min(
            sum(1 << i for i in c)
            for c in itertools.combinations(range(space.size), t)
            if len(blocker(Hypergraph.from_mask(space, sum(1 << i for i in c)))) == res.value
        )
        assert res.witness.mask == least


def test_workers_do_not_change_result():
    space = GroundSpace.partite(2, 3)
    for t in (2, 3):
        a = brute_blocker_max(space, t, workers=1)
        b = brute_blocker_max(space, t, workers=2)
        assert a == b


def test_reduce_keeps_value_and_flags_it():
    space = GroundSpace.subsets(5, 2)
    for t in range(1, 6):
        red = brute_blocker_max(space, t, reduce=True)
        assert red.reduced and red.value == brute_blocker_max(space, t).value
        assert space.edge(0) in red.witness


def test_budget_partial_and_universe_cap():
    res = brute_blocker_max(GroundSpace.partite(3, 3), 5, SearchBudget(max_families=1000))
    assert not res.exhaustive
    with pytest.raises(BudgetExceeded) as info:
        brute_blocker_max(GroundSpace.partite(3, 3), 1, SearchBudget(max_universe_bits=20))
    assert info.value.partial.exhaustive is False
    with pytest.raises(ParameterError):
        brute_blocker_max(GroundSpace.partite(2, 2), 5)


def test_result_json_roundtrip():
    res = brute_blocker_max(GroundSpace.partite(2, 2), 2)
    assert OracleResult.from_json(res.to_json()) == res
    d = res.to_dict()
    assert d["value"] == "2" and d["exhaustive"] is True and d["searched"] >= 1


def test_min_shadow_examples():
    assert brute_min_shadow(4, 3, 1, 2).value == 3
    assert brute_min_shadow(5, 3, 2, 2).value == 5
    assert brute_min_shadow(5, 3, 0, 2).value == 0
    with pytest.raises(ParameterError):
        brute_min_shadow(4, 2, 1, 3)


@pytest.mark.parametrize("m", range(1, 11))
def test_cascade_attains_min_shadow(m):
    res = brute_min_shadow(5, 3, m, 2)
    assert res.exhaustive
    assert res.value == min_cascade_shadow(5, 3, m, 2)


def test_extremal_matching_examples():
    assert brute_extremal_matching_number(GroundSpace.partite(2, 2), 2).value == 2
    assert brute_extremal_matching_number(GroundSpace.partite(3, 2), 2).value == 3
    res = brute_extremal_matching_number(GroundSpace.subsets(5, 2), 2)
    assert res.value == 4 == comb(4, 1)
    assert matching_number(res.witness) <= 1


def test_extremal_matching_budget():
    res = brute_extremal_matching_number(GroundSpace.partite(3, 2), 2, SearchBudget(max_families=10))
    assert not res.exhaustive and res.value is None


def test_rainbow_examples():
    assert rainbow_counterexample_search(2, 2, 2).verified
    vac = rainbow_counterexample_search(2, 2, 3)
    assert vac.verified and vac.vacuous
    rep = rainbow_counterexample_search(2, 3, 2)
    assert rep.verified and rep.exhaustive and rep.searched == rep.total


def test_rainbow_masks_detect_failure():
    # with |F_1| = |F_2| = n^{r-1} two copies of a star have no rainbow matching
    U = GroundSpace.partite(2, 2)
    masks = (0b0011, 0b0011)
    assert not oracle._rainbow_masks(masks, oracle.disjoint_masks(U))


def test_rainbow_partial():
    rep = rainbow_counterexample_search(3, 2, 2, SearchBudget(max_families=50))
    assert not rep.exhaustive and not rep.verified
    assert 0 < rep.fraction < 1
