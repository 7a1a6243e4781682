"""Exhaustive ground truth at desk scale.

Every search here works on bitmasks over the canonical edge indices of a
ground space and never consults the closed forms in seqcore/setfam. Results
carry an ``exhaustive`` flag; a search that hits its budget returns what it
has with ``exhaustive=False`` and that value is only a bound.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from math import comb
from typing import List, Optional, Tuple

from .errors import BudgetExceeded, ParameterError
from .hyper import GroundSpace, Hypergraph
from .setfam import canonical_cascades, cascade_build, shadow

BUDGET_ENV = "BLOCKADE_BUDGET_BITS"


@dataclass(frozen=True)
class SearchBudget:
    max_universe_bits: int = 64
    max_families: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_universe_bits <= 0 or self.max_families <= 0 or self.time_limit <= 0:
            raise ParameterError("budget fields must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        if BUDGET_ENV in os.environ and "max_universe_bits" not in overrides:
            overrides["max_universe_bits"] = int(os.environ[BUDGET_ENV])
        return cls(**overrides)


@dataclass(frozen=True)
class OracleResult:
    value: Optional[int]
    witness: Optional[Hypergraph]
    exhaustive: bool
    searched: int
    reduced: bool = False

    def to_dict(self):
        return {
            "value": None if self.value is None else str(self.value),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "exhaustive": self.exhaustive,
            "searched": self.searched,
            "reduced": self.reduced,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "OracleResult":
        return cls(
            value=None if d["value"] is None else int(d["value"]),
            witness=None if d["witness"] is None else Hypergraph.from_dict(d["witness"]),
            exhaustive=bool(d["exhaustive"]),
            searched=int(d["searched"]),
            reduced=bool(d.get("reduced", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> "OracleResult":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class RainbowReport:
    verified: bool
    counterexample: Optional[Tuple[Hypergraph, ...]]
    exhaustive: bool
    searched: int
    total: int
    vacuous: bool = False

    @property
    def fraction(self) -> float:
        return 1.0 if self.total == 0 else self.searched / self.total

    def to_dict(self):
        return {
            "verified": self.verified,
            "counterexample": None
            if self.counterexample is None
            else [F.to_dict() for F in self.counterexample],
            "exhaustive": self.exhaustive,
            "searched": self.searched,
            "total": self.total,
            "vacuous": self.vacuous,
        }


def _masks(space: GroundSpace, relation):
    """relation_masks[i] = bitmask of edges j with relation(edge_i, edge_j)."""
    edges = space.edges()
    out = []
    for e in edges:
        m = 0
        for j, f in enumerate(edges):
            if relation(e, f):
                m |= 1 << j
        out.append(m)
    return out


def meet_masks(space: GroundSpace) -> List[int]:
    return _masks(space, space.meets)


def disjoint_masks(space: GroundSpace) -> List[int]:
    return _masks(space, lambda e, f: not space.meets(e, f))


def _check_universe(space: GroundSpace, budget: SearchBudget):
    if space.size > budget.max_universe_bits:
        raise BudgetExceeded(
            f"|U|={space.size} exceeds max_universe_bits={budget.max_universe_bits}",
            partial=OracleResult(None, None, False, 0),
        )


class _Clock:
    def __init__(self, budget: SearchBudget, nodes: int = 0):
        self.budget = budget
        self.nodes = nodes
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self) -> bool:
        """Count one visited family; False once the budget is spent."""
        self.nodes += 1
        if self.nodes > self.budget.max_families:
            return False
        if self.nodes & 0xFFFF == 0 and time.monotonic() > self.deadline:
            return False
        return True


def _better(value, mask, best_value, best_mask, maximize=True):
    if best_value is None:
        return True
    if value != best_value:
        return value > best_value if maximize else value < best_value
    return mask < best_mask


def _blocker_branch(meet, size, t, first, budget):
    """Best (value, mask, nodes, complete) over t-families whose least index is ``first``."""
    full = (1 << size) - 1
    clock = _Clock(budget)
    best_value, best_mask = None, None
    complete = True

    def rec(start, depth, acc, mask):
        nonlocal best_value, best_mask, complete
        if not complete:
            return
        if not clock.tick():
            complete = False
            return
        if depth == t:
            v = acc.bit_count()
            if _better(v, mask, best_value, best_mask):
                best_value, best_mask = v, mask
            return
        # blockers only shrink as edges are added
        if best_value is not None and acc.bit_count() < best_value:
            return
        for i in range(start, size - (t - depth) + 1):
            rec(i + 1, depth + 1, acc & meet[i], mask | 1 << i)

    if t == 0:
        return full.bit_count(), 0, 1, True
    rec(first + 1, 1, full & meet[first], 1 << first)
    return best_value, best_mask, clock.nodes, complete


def _blocker_branch_job(args):
    return _blocker_branch(*args)


def brute_blocker_max(
    space: GroundSpace,
    t: int,
    budget: SearchBudget = SearchBudget(),
    reduce: bool = False,
    workers: int = 1,
) -> OracleResult:
    """max |B(F)| over all t-edge families F, with the canonically least maximizer.

    ``reduce`` fixes the first edge to canonical index 0. That is safe because
    both spaces act transitively on their edges and |B(F)| is invariant under
    automorphisms; the witness is then least among families containing edge 0.
    """
    _check_universe(space, budget)
    size = space.size
    if not 0 <= t <= size:
        raise ParameterError(f"t={t} outside 0..{size}")
    meet = meet_masks(space)
    if t == 0:
        return OracleResult(size, Hypergraph(space, frozenset()), True, 1, False)
    firsts = [0] if reduce else list(range(size - t + 1))
    # the family budget is split evenly so the outcome does not depend on workers
    share = replace(budget, max_families=max(1, budget.max_families // len(firsts)))
    jobs = [(meet, size, t, f, share) for f in firsts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_blocker_branch_job, jobs))
    else:
        parts = [_blocker_branch(*job) for job in jobs]
    best_value, best_mask = None, None
    searched, complete = 0, True
    for value, mask, nodes, done in parts:
        searched += nodes
        complete = complete and done
        if value is not None and _better(value, mask, best_value, best_mask):
            best_value, best_mask = value, mask
    witness = None if best_mask is None else Hypergraph.from_mask(space, best_mask)
    return OracleResult(best_value, witness, complete, searched, reduce)


def _shadow_masks(n, k, r):
    lower = GroundSpace.subsets(n, r)
    upper = GroundSpace.subsets(n, k)
    out = []
    for e in upper.edges():
        m = 0
        for sub in itertools.combinations(e, r):
            m |= 1 << lower.index(sub)
        out.append(m)
    return upper, out


def brute_min_shadow(n: int, k: int, m: int, r: int, budget: SearchBudget = SearchBudget()) -> OracleResult:
    """min |S_r(H)| over all m-edge H in C([n], k); witness is the least such H."""
    if not 1 <= r <= k <= n:
        raise ParameterError(f"need 1 <= r <= k <= n, got r={r}, k={k}, n={n}")
    space, shadows = _shadow_masks(n, k, r)
    _check_universe(space, budget)
    size = space.size
    if not 0 <= m <= size:
        raise ParameterError(f"m={m} outside 0..{size}")
    if m == 0:
        return OracleResult(0, Hypergraph(space, frozenset()), True, 1)
    clock = _Clock(budget)
    best_value, best_mask = None, None
    complete = True

    def rec(start, depth, acc, mask):
        nonlocal best_value, best_mask, complete
        if not complete:
            return
        if not clock.tick():
            complete = False
            return
        if depth == m:
            v = acc.bit_count()
            if _better(v, mask, best_value, best_mask, maximize=False):
                best_value, best_mask = v, mask
            return
        # shadows only grow as edges are added
        if best_value is not None and acc.bit_count() > best_value:
            return
        for i in range(start, size - (m - depth) + 1):
            rec(i + 1, depth + 1, acc | shadows[i], mask | 1 << i)

    rec(0, 0, 0, 0)
    witness = None if best_mask is None else Hypergraph.from_mask(space, best_mask)
    return OracleResult(best_value, witness, complete, clock.nodes)


def min_cascade_shadow(n: int, k: int, m: int, r: int) -> Optional[int]:
    """min |S_r(H)| over cascade forms H with exactly m edges (None if there is none)."""
    if m == 0:
        return 0
    best = None
    for form in canonical_cascades(n, k):
        if form.size() != m:
            continue
        v = len(shadow(cascade_build(form, n), r))
        best = v if best is None else min(best, v)
    return best


def _has_matching(avail: int, disj: List[int], k: int) -> bool:
    """Does the edge set ``avail`` contain k pairwise disjoint edges?"""
    if k == 0:
        return True
    if avail.bit_count() < k:
        return False
    i = (avail & -avail).bit_length() - 1
    return _has_matching(avail & disj[i], disj, k - 1) or _has_matching(avail & ~(1 << i), disj, k)


def brute_extremal_matching_number(
    space: GroundSpace, k: int, budget: SearchBudget = SearchBudget()
) -> OracleResult:
    """Largest |H| with matching number at most k-1; witness is the least such H of that size."""
    _check_universe(space, budget)
    if k < 1:
        raise ParameterError("k must be >= 1")
    size = space.size
    disj = disjoint_masks(space)
    clock = _Clock(budget)
    for s in range(size, -1, -1):
        best = None
        for combo in itertools.combinations(range(size), s):
            if not clock.tick():
                return OracleResult(None, None, False, clock.nodes)
            mask = sum(1 << i for i in combo)
            if not _has_matching(mask, disj, k) and (best is None or mask < best):
                best = mask
        if best is not None:
            return OracleResult(s, Hypergraph.from_mask(space, best), True, clock.nodes)
    raise AssertionError("the empty family always qualifies")


def _rainbow_masks(masks: Tuple[int, ...], disj: List[int]) -> bool:
    """Is there a rainbow matching for the families given as bitmasks?"""
    order = sorted(masks, key=int.bit_count)

    def extend(level, allowed):
        if level == len(order):
            return True
        avail = order[level] & allowed
        while avail:
            low = avail & -avail
            i = low.bit_length() - 1
            if extend(level + 1, allowed & disj[i]):
                return True
            avail ^= low
        return False

    full = (1 << len(disj)) - 1
    return extend(0, full)


def rainbow_counterexample_search(
    n: int, r: int, k: int, budget: SearchBudget = SearchBudget()
) -> RainbowReport:
    """Look for k families in [n]^r, each of size (k-1)n^{r-1}+1, with no rainbow matching.

    Larger families contain threshold-sized ones, and the property does not
    depend on the order of the families, so multisets of threshold-sized
    families are enough.
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    space = GroundSpace.partite(n, r)
    _check_universe(space, budget)
    size = space.size
    threshold = (k - 1) * n ** (r - 1) + 1
    if threshold > size:
        return RainbowReport(True, None, True, 0, 0, vacuous=True)
    disj = disjoint_masks(space)
    families = [sum(1 << i for i in c) for c in itertools.combinations(range(size), threshold)]
    total = comb(len(families) + k - 1, k)
    clock = _Clock(budget)
    if k == 2:
        # a pair fails iff F2 avoids everything disjoint from some edge of F1
        for a, F1 in enumerate(families):
            reach = 0
            m = F1
            while m:
                low = m & -m
                reach |= disj[low.bit_length() - 1]
                m ^= low
            for F2 in families[a:]:
                if not clock.tick():
                    return RainbowReport(False, None, False, clock.nodes - 1, total)
                if not F2 & reach:
                    pair = (Hypergraph.from_mask(space, F1), Hypergraph.from_mask(space, F2))
                    return RainbowReport(False, pair, True, clock.nodes, total)
        return RainbowReport(True, None, True, clock.nodes, total)
    for combo in itertools.combinations_with_replacement(families, k):
        if not clock.tick():
            return RainbowReport(False, None, False, clock.nodes - 1, total)
        if not _rainbow_masks(combo, disj):
            fams = tuple(Hypergraph.from_mask(space, F) for F in combo)
            return RainbowReport(False, fams, True, clock.nodes, total)
    return RainbowReport(True, None, True, clock.nodes, total)
