"""Blockers in C([n], r): words with fewer than r ANDs and fewer than r ORs.

A word w defines T_r(w), the r-subsets e of [n] satisfying
``1 in e  w_1 (2 in e  w_2 (...))``. Ordered lexicographically with a virtual
end marker ``*`` sitting between AND and OR, the sizes M_r(i) of these families
increase strictly (for n >= 2r), and the largest blocker of a t-edge family is
M(C(2r, r) - i) where M(i-1) < t <= M(i).

Shadows and cascade forms supply the bridge from arbitrary families to these
words: B(H) is the complement of the r-shadow of the complements of H.
"""

from __future__ import annotations

import itertools
import json
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .errors import BudgetExceeded, ConsistencyError, MonotonicityError, ParameterError
from .hyper import GroundSpace, Hypergraph, materialize_word
from .seqcore import BlockerMax, Entry, SeqTable
from .words import ALPHA, AND, OMEGA, OR, Word, complement, evaluate, word

__all__ = [
    "MTable",
    "CascadeForm",
    "ThetaWitness",
    "in_upsilon",
    "theta_key",
    "enumerate_theta",
    "theta_complement",
    "t_value",
    "t_value_brute",
    "m_table",
    "landmark_violations",
    "materialize_subset_family",
    "blocker_max_subsets",
    "shadow",
    "cascade_build",
    "canonical_cascades",
    "blocker_via_shadow",
    "assertion_theta_word",
    "THETA_BUDGET",
]

# enumerate_theta refuses more than this many words
THETA_BUDGET = 10**6

_RANK = {AND: 0, "*": 1, OR: 2}


class MTable(SeqTable):
    """Indexed table of M_r(i), 0 <= i <= C(2r, r)."""


def in_upsilon(w: Word, r: int) -> bool:
    if w.is_sentinel:
        return True
    return w.symbols.count(AND) < r and w.symbols.count(OR) < r


def theta_key(w: Word) -> tuple:
    """Sort key: ALPHA first, OMEGA last, words compared with ``*`` appended, AND < * < OR."""
    if w.kind == "ALPHA":
        return (-1,)
    if w.kind == "OMEGA":
        return (3,)
    return tuple(_RANK[s] for s in w.symbols) + (_RANK["*"],)


def enumerate_theta(r: int) -> List[Word]:
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")
    if comb(2 * r, r) + 1 > THETA_BUDGET:
        raise BudgetExceeded(f"C({2 * r},{r})+1 words exceed budget {THETA_BUDGET}")
    words = []

    def grow(prefix, ands, ors):
        words.append(word(prefix))
        if ands + 1 < r:
            grow(prefix + (AND,), ands + 1, ors)
        if ors + 1 < r:
            grow(prefix + (OR,), ands, ors + 1)

    grow((), 0, 0)
    words.sort(key=theta_key)
    return [ALPHA] + words + [OMEGA]


def theta_complement(w: Word) -> Word:
    return complement(w)


def _check_word(w: Word, n: int, r: int):
    if not 1 <= r <= n:
        raise ParameterError(f"need 1 <= r <= n, got r={r}, n={n}")
    if not w.is_sentinel and len(w.symbols) + 1 > n:
        raise ParameterError(f"word {w} needs n >= {len(w.symbols) + 1}, got n={n}")


def t_value(w: Word, n: int, r: int) -> int:
    """|T_r(w)| by summing over inclusion patterns of the m+1 named elements."""
    _check_word(w, n, r)
    if w.kind == "ALPHA":
        return 0
    if w.kind == "OMEGA":
        return comb(n, r)
    k = len(w.symbols) + 1
    rest = n - k
    total = 0
    for pattern in range(1 << k):
        size = pattern.bit_count()
        if size <= r and evaluate(w, lambda j: pattern >> (j - 1) & 1):
            total += comb(rest, r - size)
    return total


def t_value_brute(w: Word, n: int, r: int) -> int:
    return len(materialize_subset_family(w, n, r))


def materialize_subset_family(w: Word, n: int, r: int) -> Hypergraph:
    _check_word(w, n, r)
    return materialize_word(w, GroundSpace.subsets(n, r))


def landmark_violations(table: MTable) -> List[str]:
    """Check the four landmark identities of the M table; returns descriptions of failures."""
    n, r = table.n, table.r
    top = comb(2 * r, r)
    bad = []
    for i in range(1, r + 1):
        lo = comb(2 * r - i, r)
        hi = top - comb(2 * r - i, r - i)
        if table.entries[lo].word != word(AND * (i - 1)):
            bad.append(f"sigma({lo}) != AND^{i - 1}")
        if table.entries[hi].word != word(OR * (i - 1)):
            bad.append(f"sigma({hi}) != OR^{i - 1}")
        if table[lo] != comb(n - i, r - i):
            bad.append(f"M({lo}) != C({n - i},{r - i})")
        if table[hi] != sum(comb(n - j, r - 1) for j in range(1, i + 1)):
            bad.append(f"M({hi}) != sum_j C(n-j, r-1) up to j={i}")
    return bad


def m_table(n: int, r: int, check: bool = True) -> MTable:
    """The table M_r(i) at concrete n.

    With ``check`` (the default) n >= 2r is required and strict ascent plus the
    landmark identities are asserted. ``check=False`` only needs n >= 2r-1 so
    that every word fits, and is meant for exploring the small-n regime.
    """
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")
    if check and n < 2 * r:
        raise ParameterError(f"m_table needs n >= 2r, got n={n}, r={r}")
    words = enumerate_theta(r)
    values = [t_value(w, n, r) for w in words]
    table = MTable(n, r, tuple(Entry(i, w, v) for i, (w, v) in enumerate(zip(words, values))))
    if check:
        bad = [i for i in range(1, len(values)) if values[i - 1] >= values[i]]
        if bad:
            pairs = ", ".join(f"M({i - 1})={values[i - 1]} >= M({i})={values[i]}" for i in bad[:3])
            raise MonotonicityError(f"M_{r} at n={n} not strictly ascending: {pairs}", bad)
        problems = landmark_violations(table)
        if problems:
            raise ConsistencyError("; ".join(problems))
    return table


@lru_cache(maxsize=64)
def _cached_m_table(n, r):
    return m_table(n, r)


def blocker_max_subsets(t: int, n: int, r: int) -> BlockerMax:
    """Largest |B(F)| over t-edge families F in C([n], r)."""
    table = _cached_m_table(n, r)
    if not 0 <= t <= comb(n, r):
        raise ParameterError(f"t={t} outside 0..{comb(n, r)}")
    i = bisect_left(table.values, t)
    top = len(table) - 1
    return BlockerMax(
        value=table[top - i],
        index=i,
        word=table.entries[i].word,
        blocker_word=table.entries[top - i].word,
    )


def shadow(F: Hypergraph, r: int) -> Hypergraph:
    """r-subsets contained in some edge of the (uniform) subset family F."""
    U = F.space
    if U.kind != "subsets":
        raise ParameterError("shadow is defined for subset families")
    if not 1 <= r <= U.r:
        raise ParameterError(f"shadow uniformity {r} must lie in 1..{U.r}")
    out = set()
    for f in F.edges:
        out.update(itertools.combinations(f, r))
    return Hypergraph(GroundSpace.subsets(U.n, r), frozenset(out))


@dataclass(frozen=True)
class CascadeForm:
    """C(B_1, k) + x_1*C(B_2, k-1) + ... + x_1*...*x_s*C(B_{s+1}, k-s)."""

    k: int
    chain: Tuple[frozenset, ...]
    pivots: Tuple[int, ...] = ()

    @classmethod
    def of(cls, k, chain, pivots=()):
        return cls(int(k), tuple(frozenset(b) for b in chain), tuple(int(x) for x in pivots))

    @property
    def s(self) -> int:
        return len(self.pivots)

    def validate(self, n: int):
        ground = frozenset(range(1, n + 1))
        if len(self.chain) != self.s + 1:
            raise ParameterError(f"chain must have s+1 = {self.s + 1} blocks, got {len(self.chain)}")
        if not self.chain[0] <= ground:
            raise ParameterError("B_1 must be a subset of [n]")
        for a, b in zip(self.chain, self.chain[1:]):
            if not b < a:
                raise ParameterError("chain must be strictly decreasing")
        blocks = (ground,) + self.chain
        for i, x in enumerate(self.pivots, start=1):
            if x not in blocks[i - 1] or x in blocks[i]:
                raise ParameterError(f"pivot x_{i}={x} must lie in B_{i - 1} minus B_{i}")
        if not 0 <= self.k - self.s <= len(self.chain[-1]):
            raise ParameterError(f"last block needs k-s in 0..|B_s+1|, k={self.k}, s={self.s}")
        if self.k > n:
            raise ParameterError(f"k={self.k} exceeds n={n}")

    def size(self) -> int:
        return sum(comb(len(b), self.k - i) for i, b in enumerate(self.chain))

    def to_dict(self):
        return {"k": self.k, "chain": [sorted(b) for b in self.chain], "pivots": list(self.pivots)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "CascadeForm":
        return cls.of(d["k"], d["chain"], d.get("pivots", ()))

    @classmethod
    def from_json(cls, text: str) -> "CascadeForm":
        return cls.from_dict(json.loads(text))


def cascade_build(form: CascadeForm, n: int) -> Hypergraph:
    form.validate(n)
    edges = set()
    expected = 0
    for i, block in enumerate(form.chain):
        head = form.pivots[:i]
        piece = {tuple(sorted(head + rest)) for rest in itertools.combinations(sorted(block), form.k - i)}
        expected += len(piece)
        edges |= piece
    if len(edges) != expected:
        raise ConsistencyError("cascade pieces overlap")
    return Hypergraph(GroundSpace.subsets(n, form.k), frozenset(edges))


def canonical_cascades(n: int, k: int) -> Iterator[CascadeForm]:
    """One cascade form per size profile |B_1| > |B_2| > ..., labelled by initial segments.

    Cascades with equal profiles are isomorphic, so this covers every cascade
    up to relabelling. Pivot x_i is |B_i| + 1.
    """

    def extend(sizes):
        s = len(sizes) - 1
        if len(sizes[-1:]) and sizes[-1] >= k - s >= 0:
            yield sizes
        if s + 1 > k:
            return
        last = sizes[-1]
        # another piece needs a pivot outside the new block and room for k-s-1
        for b in range(last - 1, max(k - s - 1, 0) - 1, -1):
            yield from extend(sizes + [b])

    for b1 in range(n, -1, -1):
        for sizes in extend([b1]):
            if len(sizes) > 1 and sizes[0] == n:
                continue
            chain = [frozenset(range(1, b + 1)) for b in sizes]
            pivots = [b + 1 for b in sizes[:-1]]
            yield CascadeForm.of(k, chain, pivots)


def blocker_via_shadow(H: Hypergraph) -> Hypergraph:
    """B(H) computed as the r-sets outside the r-shadow of the complements of H."""
    U = H.space
    n, r = U.n, U.r
    if U.kind != "subsets":
        raise ParameterError("blocker_via_shadow is defined for subset families")
    if r > n - r:
        raise ParameterError(f"needs r <= n-r, got r={r}, n={n}; use hyper.blocker")
    ground = frozenset(range(1, n + 1))
    comp = Hypergraph(
        GroundSpace.subsets(n, n - r), frozenset(tuple(sorted(ground - set(e))) for e in H.edges)
    )
    covered = shadow(comp, r).edges
    return Hypergraph(U, frozenset(e for e in U.edges() if e not in covered))


class ThetaWitness(NamedTuple):
    word: Word
    labels: Tuple[int, ...]

    def materialize(self, n: int, r: int) -> Hypergraph:
        return materialize_word(self.word, GroundSpace.subsets(n, r), self.labels)


def assertion_theta_word(form: CascadeForm, r: int) -> ThetaWitness:
    """Word describing B(H) when the complement family of H is the cascade ``form``.

    Elements are visited as z^0..., x_1, z^1..., x_2, ..., x_s, z^s...; a z is
    followed by OR and a pivot by AND. An r-set containing x_1..x_r has no
    element left, so the condition from x_r onward is false for it: that tail
    is dropped, together with the pivots it leaves dangling after an AND.
    """
    n = form.k + r
    form.validate(n)
    blocks = (frozenset(range(1, n + 1)),) + form.chain
    seq: List[Tuple[int, str]] = []
    for i in range(form.s + 1):
        pivot = form.pivots[i] if i < form.s else None
        tail = blocks[i + 1] | ({pivot} if pivot is not None else set())
        seq.extend((z, "z") for z in sorted(blocks[i] - tail))
        if pivot is not None:
            seq.append((pivot, "x"))
    if form.s >= r:
        cut = [j for j, (_, kind) in enumerate(seq) if kind == "x"][r - 1]
        seq = seq[:cut]
    while seq and seq[-1][1] == "x":
        seq.pop()
    if not seq:
        return ThetaWitness(ALPHA, ())
    symbols = [OR if kind == "z" else AND for _, kind in seq[:-1]]
    beta = word(symbols)
    if not in_upsilon(beta, r):
        raise ConsistencyError(f"assertion word {beta} outside Upsilon_{r}")
    return ThetaWitness(beta, tuple(e for e, _ in seq))
