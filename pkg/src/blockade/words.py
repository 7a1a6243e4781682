"""Words over {AND, OR} with the two sentinels ALPHA (empty family) and OMEGA (everything).

A word ``(s_1, ..., s_m)`` stands for the nested condition

    p_1 s_1 (p_2 s_2 (... s_m (p_{m+1})))

over m+1 anchor predicates. The same class serves both ground spaces; what
varies between them is which words are admissible and how they are ordered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ParameterError

AND = "&"
OR = "|"

_SWAP = {AND: OR, OR: AND}


@dataclass(frozen=True)
class Word:
    kind: str = "WORD"  # "ALPHA", "OMEGA" or "WORD"
    symbols: tuple = ()

    def __post_init__(self):
        if self.kind not in ("ALPHA", "OMEGA", "WORD"):
            raise ParameterError(f"unknown word kind {self.kind!r}")
        if self.kind != "WORD" and self.symbols:
            raise ParameterError("sentinels carry no symbols")
        if any(s not in _SWAP for s in self.symbols):
            raise ParameterError(f"bad symbols {self.symbols!r}")

    @property
    def is_sentinel(self) -> bool:
        return self.kind != "WORD"

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Word({render(self)!r})"


ALPHA = Word("ALPHA")
OMEGA = Word("OMEGA")
EMPTY = Word("WORD", ())


def word(symbols: Sequence[str] | str) -> Word:
    """Build a proper word from an iterable of ``&``/``|`` symbols."""
    return Word("WORD", tuple(symbols))


def render(w: Word) -> str:
    if w.kind != "WORD":
        return w.kind
    return "".join(w.symbols)


def parse_word(text: str) -> Word:
    """Inverse of :func:`render`. ``""`` and ``"()"`` both denote the empty word."""
    text = text.strip()
    if text in ("ALPHA", "OMEGA"):
        return Word(text)
    if text == "()":
        return EMPTY
    if set(text) - {AND, OR}:
        raise ParameterError(f"cannot parse word {text!r}: use '&', '|', ALPHA or OMEGA")
    return word(text)


def complement(w: Word) -> Word:
    """Swap AND and OR pointwise; ALPHA and OMEGA swap with each other."""
    if w.kind == "ALPHA":
        return OMEGA
    if w.kind == "OMEGA":
        return ALPHA
    return Word("WORD", tuple(_SWAP[s] for s in w.symbols))


def evaluate(w: Word, member: Callable[[int], bool]) -> bool:
    """Evaluate the nested condition, ``member(j)`` answering predicate j (1-based).

    Folds right to left, so only the predicates up to len(w)+1 are consulted.
    """
    if w.kind == "ALPHA":
        return False
    if w.kind == "OMEGA":
        return True
    m = len(w.symbols)
    value = member(m + 1)
    for j in range(m, 0, -1):
        if w.symbols[j - 1] == AND:
            value = member(j) and value
        else:
            value = member(j) or value
    return value
