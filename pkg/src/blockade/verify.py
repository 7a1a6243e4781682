"""Named invariant suites, shared by ``blockade verify`` and the test suite.

Each suite returns a list of :class:`Check`; a failed check carries the first
counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List

from . import hyper, oracle, seqcore, setfam
from .errors import ParameterError
from .hyper import GroundSpace, Hypergraph
from .words import complement


@dataclass
class Check:
    name: str
    passed: bool
    checked: int
    counterexample: object = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f" counterexample={self.counterexample}"
        return f"{status} {self.name} ({self.checked} checked){tail}"


class _Collector:
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.counterexample = None

    def __call__(self, ok, witness):
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = witness

    def bulk(self, count, witness=None):
        """Record ``count`` checks at once; ``witness`` is the first failure, if any."""
        self.checked += count
        if witness is not None and self.counterexample is None:
            self.counterexample = witness

    def result(self) -> Check:
        return Check(self.name, self.counterexample is None, self.checked, self.counterexample)


def lemma18(n, r, **_) -> List[Check]:
    N = seqcore.n_table(n, r).values
    top = 2**r
    c = _Collector(f"N(j+i)-N(j) >= (n-1)N(i), n={n} r={r}")
    for i in range(top // 2 + 1):
        bound = (n - 1) * N[i]
        bad = next((j for j in range(i, top - i + 1) if N[j + i] - N[j] < bound), None)
        c.bulk(top - 2 * i + 1, None if bad is None else (i, bad))
    return [c.result()]


def knuth(n, r, **_) -> List[Check]:
    N = seqcore.n_table(n, r).values
    c = _Collector(f"N(k) = max N(j)+(n-1)N(i) over i+j=k, i<=j, n={n} r={r}")
    for k in range(2, 2**r + 1):
        best = max(N[k - i] + (n - 1) * N[i] for i in range(k // 2 + 1))
        c(best == N[k], k)
    return [c.result()]


def fractal(n, r, **_) -> List[Check]:
    table = seqcore.n_table(n, r)
    N = table.values
    checks = []

    c = _Collector("N_{r-1} is an initial segment of N_r")
    if r >= 2:
        c(N[: 2 ** (r - 1) + 1] == seqcore.n_table(n, r - 1).values, r)
    checks.append(c.result())

    c = _Collector("sigma(2^p) = AND^{r-p-1} and N(2^p) = n^p")
    for p in range(r):
        w = table.entries[2**p].word
        c(w.symbols == ("&",) * (r - p - 1) and N[2**p] == n**p, p)
    checks.append(c.result())

    c = _Collector("N(2^p+i) = n^p + (n-1)N(i) for i <= 2^p")
    for p in range(r):
        for i in range(2**p + 1):
            c(N[2**p + i] == n**p + (n - 1) * N[i], (p, i))
    checks.append(c.result())

    c = _Collector("N(2^p+b) - N(2^p+c) = (n-1)(N(b) - N(c)) for b,c <= 2^p")
    for p in range(r):
        for b in range(2**p + 1):
            for cc in range(2**p + 1):
                c(N[2**p + b] - N[2**p + cc] == (n - 1) * (N[b] - N[cc]), (p, b, cc))
    checks.append(c.result())

    # Literal two-level statement. Holds only for n = 2 or b = 0; kept so the
    # suite reports the first counterexample rather than hiding it.
    c = _Collector("N(2^{p+1}+b) - N(2^p+c) = (n-1)(N(2^p+b) - N(c)) as stated")
    for p in range(r):
        for b in range(min(2**p, 2**r - 2 ** (p + 1)) + 1):
            for cc in range(2**p + 1):
                c(N[2 ** (p + 1) + b] - N[2**p + cc] == (n - 1) * (N[2**p + b] - N[cc]), (p, b, cc))
    checks.append(c.result())

    c = _Collector("binary formulas match the table")
    for i, e in enumerate(table.entries):
        c(seqcore.word_from_index(i, r) == e.word and seqcore.n_explicit(i, n, r) == e.value, i)
        c(seqcore.index_of(e.word, r) == i, i)
    checks.append(c.result())
    return checks


def product(n, r, **_) -> List[Check]:
    N = seqcore.n_table(n, r).values
    top = 2**r
    c = _Collector(f"N(a)N(b) <= N(ab), n={n} r={r}")
    for a in range(top + 1):
        for b in range(a, (top // a if a else top) + 1):
            c(N[a] * N[b] <= N[a * b], (a, b))
    checks = [c.result()]
    c = _Collector("t*b(t) <= n^{2(r-1)} for t <= n^{r-1}")
    half = 2 ** (r - 1)
    # b is constant on (N(q-1), N(q)], so t = N(q) is the worst case
    for q in range(1, half + 1):
        c(N[q] * N[top - q] <= n ** (2 * (r - 1)), q)
    checks.append(c.result())
    return checks


def demorgan(n, r, **_) -> List[Check]:
    c = _Collector(f"B(F_r(w)) = F_r(complement w), n={n} r={r}")
    d = _Collector("i(complement w) = 2^r - i(w)")
    for i, w in enumerate(seqcore.enumerate_sigma(r)):
        F = hyper.materialize_partite_family(w, n, r)
        c(hyper.blocker(F) == hyper.materialize_partite_family(complement(w), n, r), str(w))
        d(seqcore.index_of(complement(w), r) == 2**r - i, str(w))
    return [c.result(), d.result()]


def landmarks(n, r, **_) -> List[Check]:
    checks = []
    c = _Collector(f"M table ascends and meets its landmarks, n={n} r={r}")
    table = setfam.m_table(n, r, check=False)
    problems = setfam.landmark_violations(table)
    ascent = all(a < b for a, b in zip(table.values, table.values[1:]))
    c(ascent and not problems, problems or "not strictly ascending")
    checks.append(c.result())

    top = comb(2 * r, r)
    c = _Collector("index(complement w) = C(2r,r) - index(w)")
    words = table.words
    where = {w: i for i, w in enumerate(words)}
    for i, w in enumerate(words):
        c(where[complement(w)] == top - i, str(w))
    checks.append(c.result())

    c = _Collector("pattern count equals enumeration")
    e = _Collector("B(T_r(w)) = T_r(complement w)")
    if comb(n, r) <= 5000:
        for w in words:
            T = setfam.materialize_subset_family(w, n, r)
            c(len(T) == setfam.t_value(w, n, r), str(w))
            e(hyper.blocker(T) == setfam.materialize_subset_family(complement(w), n, r), str(w))
    checks += [c.result(), e.result()]
    return checks


def theorem_bisa(n, r, budget=None, **_) -> List[Check]:
    budget = budget or oracle.SearchBudget()
    space = GroundSpace.subsets(n, r)
    values = set(setfam.m_table(n, r).values)
    c = _Collector(f"brute b(t) is an M value and equals the closed form, n={n} r={r}")
    bb = _Collector("b(b(t)) >= t")
    for t in range(space.size + 1):
        res = oracle.brute_blocker_max(space, t, budget)
        closed = setfam.blocker_max_subsets(t, n, r).value
        c(res.exhaustive and res.value in values and res.value == closed, (t, res.value, closed))
        bb(setfam.blocker_max_subsets(closed, n, r).value >= t, t)
    return [c.result(), bb.result()]


def _random_family(rng, space, p=None):
    p = rng.random() if p is None else p
    return Hypergraph(space, frozenset(e for e in space.edges() if rng.random() < p))


def _random_shift_pair(rng, space):
    if space.kind == "partite":
        side = rng.randint(1, space.r)
        a, b = sorted(rng.sample(range(1, space.n + 1), 2))
        return (side, a), (side, b)
    a, b = sorted(rng.sample(range(1, space.n + 1), 2))
    return a, b


def shifting(n, r, space="partite", samples=200, seed=0, **_) -> List[Check]:
    rng = random.Random(seed)
    U = GroundSpace(space, n, r)
    if n < 2:
        raise ParameterError("shifting needs n >= 2")
    fix = _Collector(f"closure is shifted and keeps |H|, {U}")
    nu = _Collector("shifting does not raise the matching number")
    split = _Collector("after closure F- is contained in F+")
    rainbow = _Collector("rainbow matching after a shift implies one before")
    for _ in range(samples):
        H = _random_family(rng, U)
        C = hyper.shift_closure(H)
        fix(len(C) == len(H) and hyper.is_shifted(C), H.to_dict())
        x, y = _random_shift_pair(rng, U)
        nu(hyper.matching_number(hyper.shift_once(H, x, y)) <= hyper.matching_number(H), (H.to_dict(), x, y))
        if U.kind == "partite" and r >= 2:
            plus, minus = hyper.split_last_side(C)
            split(minus <= plus, H.to_dict())
        fams = [_random_family(rng, U) for _ in range(rng.choice((2, 3)))]
        if any(len(F) == 0 for F in fams):
            continue
        after = hyper.rainbow_matching([hyper.shift_once(F, x, y) for F in fams])
        if after is not None:
            rainbow(hyper.rainbow_matching(fams) is not None, ([F.to_dict() for F in fams], x, y))
        else:
            rainbow.checked += 1
    checks = [fix.result(), nu.result(), rainbow.result()]
    if U.kind == "partite" and r >= 2:
        checks.insert(2, split.result())
    return checks


def g_lemma(n, r, k=2, budget=None, **_) -> List[Check]:
    budget = budget or oracle.SearchBudget()
    U = GroundSpace.partite(n, r)
    c = _Collector(f"g({n},{r},{k}) = (k-1)n^(r-1) by exhaustion")
    res = oracle.brute_extremal_matching_number(U, k, budget)
    c(res.exhaustive and res.value == (k - 1) * n ** (r - 1), res.value)
    s = _Collector("(k-1)-vertex star has size (k-1)n^(r-1) and matching number k-1")
    if k - 1 <= n:
        S = hyper.star(U, [(1, v) for v in range(1, k)])
        s(len(S) == (k - 1) * n ** (r - 1) and hyper.matching_number(S) == k - 1, len(S))
    d = _Collector("perfect matchings partition [n]^r")
    parts = hyper.perfect_matching_decomposition(n, r)
    seen = [e for M in parts for e in M.edges]
    d(len(parts) == n ** (r - 1) and all(len(M) == n and hyper.matching_number(M) == n for M in parts), len(parts))
    d(len(seen) == n**r and set(seen) == set(U.edges()), len(seen))
    return [c.result(), s.result(), d.result()]


def rainbow_k2(n, r, budget=None, **_) -> List[Check]:
    budget = budget or oracle.SearchBudget()
    rep = oracle.rainbow_counterexample_search(n, r, 2, budget)
    c = _Collector(f"two families above n^(r-1) in [{n}]^{r} have a rainbow matching")
    c(rep.verified and rep.exhaustive, rep.to_dict())
    c.checked = rep.searched
    return [c.result()]


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "lemma18": lemma18,
    "knuth": knuth,
    "fractal": fractal,
    "product": product,
    "demorgan": demorgan,
    "landmarks": landmarks,
    "theorem-bisa": theorem_bisa,
    "shifting": shifting,
    "g-lemma": g_lemma,
    "rainbow-k2": rainbow_k2,
}


def run_suite(name: str, **params) -> List[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(**params)
