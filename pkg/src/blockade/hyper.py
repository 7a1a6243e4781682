"""Concrete hypergraphs over [n]^r (partite) and C([n], r) (subsets).

Partite edges are r-tuples ``(e_1, ..., e_r)`` with e_j the vertex picked on
side j; two partite edges meet iff they agree in some coordinate. Subset edges
are strictly increasing r-tuples over 1..n.

Partite vertices, where one is needed explicitly (shifting), are ``(side, value)``
pairs. The anchor vertex of every side is value 1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, ParameterError
from .words import Word, evaluate

Edge = Tuple[int, ...]

PARTITE = "partite"
SUBSETS = "subsets"


@dataclass(frozen=True)
class GroundSpace:
    kind: str
    n: int
    r: int

    def __post_init__(self):
        if self.kind not in (PARTITE, SUBSETS):
            raise ParameterError(f"unknown space kind {self.kind!r}")
        if self.n < 1 or self.r < 1:
            raise ParameterError("n and r must be >= 1")
        if self.kind == SUBSETS and self.r > self.n:
            raise ParameterError(f"subsets space needs r <= n, got r={self.r}, n={self.n}")

    @classmethod
    def partite(cls, n, r):
        return cls(PARTITE, n, r)

    @classmethod
    def subsets(cls, n, r):
        return cls(SUBSETS, n, r)

    @property
    def size(self) -> int:
        return self.n**self.r if self.kind == PARTITE else comb(self.n, self.r)

    def edges(self) -> List[Edge]:
        """All edges, in canonical index order."""
        return list(self._edges)

    @cached_property
    def _edges(self) -> Tuple[Edge, ...]:
        if self.kind == PARTITE:
            return tuple(itertools.product(range(1, self.n + 1), repeat=self.r))
        return tuple(sorted(itertools.combinations(range(1, self.n + 1), self.r), key=self.index))

    def index(self, e: Edge) -> int:
        """Canonical dense index: mixed radix (partite) or colex rank (subsets)."""
        if self.kind == PARTITE:
            i = 0
            for x in e:
                i = i * self.n + (x - 1)
            return i
        return sum(comb(x - 1, j) for j, x in enumerate(e, start=1))

    def edge(self, i: int) -> Edge:
        return self._edges[i]

    def validate(self, e) -> Edge:
        e = tuple(int(x) for x in e)
        if len(e) != self.r or not all(1 <= x <= self.n for x in e):
            raise ParameterError(f"edge {e} not in {self}")
        if self.kind == SUBSETS and any(a >= b for a, b in zip(e, e[1:])):
            raise ParameterError(f"subset edge {e} must be strictly increasing")
        return e

    def meets(self, e: Edge, f: Edge) -> bool:
        if self.kind == PARTITE:
            return any(a == b for a, b in zip(e, f))
        return not set(e).isdisjoint(f)

    def contains(self, e: Edge, vertex) -> bool:
        if self.kind == PARTITE:
            side, value = vertex
            return e[side - 1] == value
        return vertex in e

    def anchor(self, j: int):
        """The j-th predicate vertex used when materializing words."""
        return (j, 1) if self.kind == PARTITE else j

    def to_dict(self):
        return {"kind": self.kind, "n": self.n, "r": self.r}

    def __str__(self):
        if self.kind == PARTITE:
            return f"[{self.n}]^{self.r}"
        return f"C([{self.n}],{self.r})"


@dataclass(frozen=True)
class Hypergraph:
    space: GroundSpace
    edges: frozenset

    @classmethod
    def of(cls, space: GroundSpace, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        return cls(space, frozenset(space.validate(e) for e in edges))

    @classmethod
    def full(cls, space: GroundSpace) -> "Hypergraph":
        return cls(space, frozenset(space.edges()))

    @classmethod
    def from_mask(cls, space: GroundSpace, mask: int) -> "Hypergraph":
        return cls(space, frozenset(space.edge(i) for i in range(mask.bit_length()) if mask >> i & 1))

    @cached_property
    def mask(self) -> int:
        """Bitmask over canonical edge indices."""
        m = 0
        for e in self.edges:
            m |= 1 << self.space.index(e)
        return m

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges, key=self.space.index)

    def __len__(self):
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __contains__(self, e):
        return tuple(e) in self.edges

    def __le__(self, other):
        return self.space == other.space and self.edges <= other.edges

    def to_dict(self):
        return {"space": self.space.to_dict(), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "Hypergraph":
        s = d["space"]
        return cls.of(GroundSpace(s["kind"], int(s["n"]), int(s["r"])), d["edges"])

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_dict(json.loads(text))


def blocker(F: Hypergraph) -> Hypergraph:
    """All edges of the ambient space meeting every edge of F."""
    U = F.space
    return Hypergraph(U, frozenset(e for e in U.edges() if all(U.meets(e, f) for f in F.edges)))


def materialize_word(w: Word, space: GroundSpace, labels: Optional[Sequence] = None) -> Hypergraph:
    """Edges satisfying the nested condition of ``w``.

    Predicate j asks whether the edge contains ``labels[j-1]``; by default the
    anchor vertex of side j (partite) or the element j (subsets).
    """
    if labels is None:
        label = space.anchor
    else:
        label = lambda j: labels[j - 1]  # noqa: E731
    need = len(w.symbols) + 1 if not w.is_sentinel else 0
    if labels is None and need > (space.r if space.kind == PARTITE else space.n):
        raise ParameterError(f"word {w} too long for {space}")
    return Hypergraph(
        space,
        frozenset(e for e in space.edges() if evaluate(w, lambda j: space.contains(e, label(j)))),
    )


def materialize_partite_family(w: Word, n: int, r: int) -> Hypergraph:
    """F_r(w) with anchors at vertex 1 of each side."""
    if w.kind == "WORD" and len(w.symbols) > r - 1:
        raise ParameterError(f"word {w} has length {len(w)} > r-1 = {r - 1}")
    return materialize_word(w, GroundSpace.partite(n, r))


def matching_number(H: Hypergraph, max_nodes: int = 10**7) -> int:
    """Exact maximum matching size, by branch and bound over bitmasks."""
    edges = H.sorted_edges()
    m = len(edges)
    U = H.space
    cap = U.n if U.kind == PARTITE else U.n // U.r
    disj = [0] * m
    for i, j in itertools.combinations(range(m), 2):
        if not U.meets(edges[i], edges[j]):
            disj[i] |= 1 << j
            disj[j] |= 1 << i
    best = 0
    nodes = 0

    def search(avail: int, size: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"matching search exceeded {max_nodes} nodes", partial=best)
        if size > best:
            best = size
        if avail == 0 or best >= cap or size + avail.bit_count() <= best:
            return
        i = (avail & -avail).bit_length() - 1
        search(avail & disj[i], size + 1)
        search(avail & ~(1 << i), size)

    search((1 << m) - 1, 0)
    return best


def rainbow_matching(families: Sequence[Hypergraph]) -> Optional[List[Edge]]:
    """Pairwise disjoint representatives, one per family, or None.

    Families are searched smallest first; edges in canonical order. The
    result lists the representatives in the input order of the families.
    """
    if not families:
        raise ParameterError("need at least one family")
    U = families[0].space
    if any(F.space != U for F in families):
        raise ParameterError("families live in different ground spaces")
    order = sorted(range(len(families)), key=lambda i: len(families[i]))
    pools = [families[i].sorted_edges() for i in order]
    chosen: List[Edge] = []

    def extend(level):
        if level == len(pools):
            return True
        for e in pools[level]:
            if all(not U.meets(e, c) for c in chosen):
                chosen.append(e)
                if extend(level + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        return None
    out: List[Edge] = [()] * len(families)
    for pos, i in enumerate(order):
        out[i] = chosen[pos]
    return out


def _shift_pairs(space: GroundSpace):
    """Admissible (x, y), x < y, in sweep order."""
    if space.kind == PARTITE:
        for side in range(1, space.r + 1):
            for a, b in itertools.combinations(range(1, space.n + 1), 2):
                yield (side, a), (side, b)
    else:
        yield from itertools.combinations(range(1, space.n + 1), 2)


def _replace(space: GroundSpace, e: Edge, x, y) -> Edge:
    if space.kind == PARTITE:
        side, a = x
        return e[: side - 1] + (a,) + e[side:]
    return tuple(sorted((set(e) - {y}) | {x}))


def shift_once(H: Hypergraph, x, y) -> Hypergraph:
    """s_xy: move y to x in every edge where the shifted edge is not already present."""
    U = H.space
    if U.kind == PARTITE:
        if x[0] != y[0]:
            raise ParameterError(f"partite shift needs vertices on one side, got {x}, {y}")
        if not x[1] < y[1]:
            raise ParameterError(f"shift needs x < y, got {x}, {y}")
    elif not x < y:
        raise ParameterError(f"shift needs x < y, got {x}, {y}")
    out = set()
    for e in H.edges:
        if U.contains(e, y) and not U.contains(e, x):
            moved = _replace(U, e, x, y)
            out.add(e if moved in H.edges else moved)
        else:
            out.add(e)
    return Hypergraph(U, frozenset(out))


def is_shifted(H: Hypergraph) -> bool:
    return all(shift_once(H, x, y) == H for x, y in _shift_pairs(H.space))


def shift_closure(H: Hypergraph) -> Hypergraph:
    """Apply all admissible shifts in a fixed sweep order until nothing moves."""
    pairs = list(_shift_pairs(H.space))
    while True:
        changed = False
        for x, y in pairs:
            G = shift_once(H, x, y)
            if G != H:
                H, changed = G, True
        if not changed:
            return H


def split_last_side(F: Hypergraph) -> Tuple[Hypergraph, Hypergraph]:
    """(F+, F-): traces on the first r-1 sides of edges with / without the anchor of side r."""
    U = F.space
    if U.kind != PARTITE or U.r < 2:
        raise ParameterError("needs a partite space with r >= 2")
    lower = GroundSpace.partite(U.n, U.r - 1)
    plus = frozenset(e[:-1] for e in F.edges if e[-1] == 1)
    minus = frozenset(e[:-1] for e in F.edges if e[-1] != 1)
    return Hypergraph(lower, plus), Hypergraph(lower, minus)


def star(space: GroundSpace, vertices: Sequence = None) -> Hypergraph:
    """Edges containing any of the given vertices (default: the first anchor)."""
    if vertices is None:
        vertices = [space.anchor(1)]
    return Hypergraph(
        space, frozenset(e for e in space.edges() if any(space.contains(e, v) for v in vertices))
    )


def perfect_matching_decomposition(n: int, r: int) -> List[Hypergraph]:
    """[n]^r as n^{r-1} disjoint perfect matchings, one per offset vector."""
    if n < 1 or r < 1:
        raise ParameterError("n and r must be >= 1")
    U = GroundSpace.partite(n, r)
    out = []
    for offsets in itertools.product(range(n), repeat=r - 1):
        edges = frozenset(
            (x,) + tuple((x - 1 + a) % n + 1 for a in offsets) for x in range(1, n + 1)
        )
        out.append(Hypergraph(U, edges))
    return out

