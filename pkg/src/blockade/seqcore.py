"""AND/OR word calculus for the r-partite space [n]^r.

Words of length at most r-1 are the nodes of a complete binary tree (AND is the
left child, OR the right one). Listed in in-order, with ALPHA in front and OMEGA
at the back, they index the families F_r(w) in increasing size; N_r(i) is the
size of the i-th family. The largest blocker of a t-edge family is
N(2^r - N*(t)), where N*(t) is the least q with t <= N(q).

Everything is exact Python integers, so values never overflow.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import List, NamedTuple

from .errors import BudgetExceeded, ConsistencyError, MonotonicityError, ParameterError
from .words import ALPHA, AND, OMEGA, OR, Word, complement, word

__all__ = [
    "Entry",
    "SeqTable",
    "BlockerMax",
    "enumerate_sigma",
    "word_from_index",
    "index_of",
    "complement",
    "binary_decomposition",
    "f_value",
    "n_table",
    "n_explicit",
    "n_star",
    "blocker_max_partite",
    "TABLE_BUDGET_BITS",
]

# n_table refuses r above this (2^r + 1 rows).
TABLE_BUDGET_BITS = 22


def _check_r(r):
    if not isinstance(r, int) or r < 1:
        raise ParameterError(f"r must be a positive integer, got {r!r}")


def _check_n(n):
    if not isinstance(n, int) or n < 2:
        raise ParameterError(f"n must be >= 2, got {n!r}")


def _check_in_sigma(w: Word, r: int):
    if w.kind == "WORD" and len(w.symbols) > r - 1:
        raise ParameterError(f"word {w} has length {len(w)} > r-1 = {r - 1}")


class Entry(NamedTuple):
    index: int
    word: Word
    value: int


@dataclass(frozen=True)
class SeqTable:
    n: int
    r: int
    entries: tuple

    @property
    def values(self) -> List[int]:
        return [e.value for e in self.entries]

    @property
    def words(self) -> List[Word]:
        return [e.word for e in self.entries]

    def __getitem__(self, i):
        return self.entries[i].value

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class BlockerMax:
    """Answer of a blocker-maximum query.

    ``index`` is the table position of the witness word; the family of
    ``word`` has at least t edges and its blocker is the family of
    ``blocker_word``, of size ``value``.
    """

    value: int
    index: int
    word: Word
    blocker_word: Word

    def __int__(self):
        return self.value


def enumerate_sigma(r: int) -> List[Word]:
    """ALPHA, the words of length <= r-1 in in-order (AND subtree, node, OR subtree), OMEGA."""
    _check_r(r)
    out = [ALPHA]

    def visit(prefix):
        if len(prefix) < r - 1:
            visit(prefix + (AND,))
            out.append(word(prefix))
            visit(prefix + (OR,))
        else:
            out.append(word(prefix))

    visit(())
    out.append(OMEGA)
    return out


def binary_decomposition(i: int) -> List[int]:
    """Exponents k_0 > k_1 > ... > k_s with i = sum 2^k_j."""
    if i < 0:
        raise ParameterError("negative index")
    return [k for k in range(i.bit_length() - 1, -1, -1) if i >> k & 1]


def word_from_index(i: int, r: int) -> Word:
    _check_r(r)
    if not 0 <= i <= 2**r:
        raise ParameterError(f"index {i} outside 0..2^{r}")
    if i == 0:
        return ALPHA
    if i == 2**r:
        return OMEGA
    ks = binary_decomposition(i)
    symbols = [AND] * (r - ks[0] - 1)
    for hi, lo in zip(ks, ks[1:]):
        symbols.append(OR)
        symbols.extend([AND] * (hi - lo - 1))
    return word(symbols)


def index_of(w: Word, r: int) -> int:
    """Position of ``w`` in :func:`enumerate_sigma` order, read off the AND-runs of the word."""
    _check_r(r)
    if w.kind == "ALPHA":
        return 0
    if w.kind == "OMEGA":
        return 2**r
    _check_in_sigma(w, r)
    runs = [0]
    for s in w.symbols:
        if s == AND:
            runs[-1] += 1
        else:
            runs.append(0)
    k = r - 1 - runs[0]
    index = 1 << k
    for run in runs[1:]:
        k -= run + 1
        index += 1 << k
    return index


def f_value(w: Word, n: int, r: int) -> int:
    """Size of F_r(w), by structural recursion on the word.

    Leading positions are peeled with f_r(AND, s) = f_{r-1}(s) and
    f_r(OR, s) = n^{r-1} + (n-1) f_{r-1}(s); a word shorter than r-1 picks up
    a factor n per unused side. Base case f_1(empty) = 1.
    """
    _check_n(n)
    _check_r(r)
    if w.kind == "ALPHA":
        return 0
    if w.kind == "OMEGA":
        return n**r
    _check_in_sigma(w, r)
    m = len(w.symbols)
    value = 1
    # value is f_{depth}(suffix) where suffix has length depth-1
    for depth, s in enumerate(reversed(w.symbols), start=1):
        value = value if s == AND else n**depth + (n - 1) * value
    return value * n ** (r - 1 - m)


def n_table(n: int, r: int) -> SeqTable:
    _check_n(n)
    _check_r(r)
    if r > TABLE_BUDGET_BITS:
        raise BudgetExceeded(f"table of 2^{r}+1 rows exceeds budget 2^{TABLE_BUDGET_BITS}")
    words = enumerate_sigma(r)
    values = [f_value(w, n, r) for w in words]
    bad = [i for i in range(1, len(values)) if values[i - 1] >= values[i]]
    if bad:
        raise MonotonicityError(f"N_{r} not strictly increasing at indices {bad[:5]}", bad)
    for p in range(r):
        base = n**p
        for i in range(2**p + 1):
            if values[2**p + i] != base + (n - 1) * values[i]:
                raise ConsistencyError(f"self-similarity fails at p={p}, i={i}")
    return SeqTable(n, r, tuple(Entry(i, w, v) for i, (w, v) in enumerate(zip(words, values))))


def n_explicit(i: int, n: int, r: int) -> int:
    """N(i) = sum_j n^{k_j} (n-1)^j over the binary decomposition of i."""
    _check_n(n)
    _check_r(r)
    if not 0 <= i <= 2**r:
        raise ParameterError(f"index {i} outside 0..2^{r}")
    return sum(n**k * (n - 1) ** j for j, k in enumerate(binary_decomposition(i)))


def n_star(t: int, n: int, r: int) -> int:
    """Least q with t <= N(q); 0 for t = 0."""
    _check_n(n)
    _check_r(r)
    if not 0 <= t <= n**r:
        raise ParameterError(f"t={t} outside 0..{n**r}")
    # N is strictly increasing, so a binary search over indices is enough;
    # n_explicit keeps this usable at r far beyond table size.
    return bisect_left(range(2**r + 1), t, key=lambda q: n_explicit(q, n, r))


def blocker_max_partite(t: int, n: int, r: int) -> BlockerMax:
    """Largest |B(F)| over t-edge families F in [n]^r."""
    q = n_star(t, n, r)
    return BlockerMax(
        value=n_explicit(2**r - q, n, r),
        index=q,
        word=word_from_index(q, r),
        blocker_word=word_from_index(2**r - q, r),
    )
