"""Letters, words, compositions and run-length block words.

Words are plain tuples of letters.  Over the two-letter alphabet the letters
are :class:`Letter` members, which are ints, so ``(0, 1)`` and
``(Letter.X0, Letter.X1)`` compare and hash equal.  The shuffle engines accept
tuples over any hashable, orderable alphabet.
"""

from __future__ import annotations

from enum import IntEnum
from itertools import groupby
from typing import Hashable, Iterable, Sequence, Tuple

Word = Tuple[Hashable, ...]


class Letter(IntEnum):
    X0 = 0
    X1 = 1

    def __str__(self) -> str:
        return str(int(self))


X0 = Letter.X0
X1 = Letter.X1
EMPTY: Word = ()


def word_key(w: Word):
    """Canonical order: shorter words first, then lexicographic (X0 < X1)."""
    return (len(w), tuple(w))


def power(letter: Letter, exponent: int) -> Word:
    if exponent < 0:
        raise ValueError(f"negative exponent {exponent}")
    return (letter,) * exponent


def x0(exponent: int = 1) -> Word:
    return (X0,) * exponent


def x1(exponent: int = 1) -> Word:
    return (X1,) * exponent


def parse_word(text: str) -> Word:
    """Parse the '0'/'1' wire syntax, e.g. ``"0011"``; the empty string is the empty word."""
    try:
        return tuple(Letter(int(ch)) for ch in text if not ch.isspace())
    except ValueError:
        raise ValueError(f"invalid word {text!r}: only '0' and '1' are allowed") from None


def format_word(w: Word) -> str:
    return "".join(str(int(letter)) for letter in w)


class Composition(tuple):
    """A nonempty tuple of positive integers, the argument of a multiple zeta value."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def admissible(self) -> bool:
        return self[0] >= 2

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def parse_composition(text: str) -> Composition:
    """Parse comma-separated positive integers, e.g. ``"3,1,2"``."""
    try:
        return Composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"invalid composition {text!r}: {exc}") from None


def word_to_composition(w: Word) -> Composition:
    """Map x0^(s1-1) x1 ... x0^(sk-1) x1 to (s1, ..., sk).

    Defined on every nonempty word ending in X1; s1 = 1 is allowed here.
    """
    if not w:
        raise ValueError("the empty word has no composition image")
    if w[-1] != X1:
        raise ValueError(f"word {format_word(w)} does not end in x1")
    parts = []
    run = 0
    for letter in w:
        if letter == X1:
            parts.append(run + 1)
            run = 0
        elif letter == X0:
            run += 1
        else:
            raise ValueError(f"letter {letter!r} is not in {{x0, x1}}")
    return Composition(parts)


def composition_to_word(c: Sequence[int]) -> Word:
    c = Composition(c)
    w: list = []
    for part in c:
        w.extend((X0,) * (part - 1))
        w.append(X1)
    return tuple(w)


def is_admissible(w: Word) -> bool:
    return len(w) > 0 and w[0] == X0 and w[-1] == X1


class BlockWord(tuple):
    """Run-length encoding ``((letter, exponent), ...)`` with maximal runs."""

    def __new__(cls, blocks: Iterable[Tuple[Hashable, int]] = ()):
        blocks = tuple((letter, int(e)) for letter, e in blocks)
        for i, (letter, e) in enumerate(blocks):
            if e < 1:
                raise ValueError(f"block exponents must be positive, got {e}")
            if i and blocks[i - 1][0] == letter:
                raise ValueError(f"adjacent blocks share the letter {letter!r}")
        return super().__new__(cls, blocks)

    def __repr__(self) -> str:
        return f"BlockWord({tuple(self)})"

    @property
    def length(self) -> int:
        return sum(e for _, e in self)


def to_blocks(w: Word) -> BlockWord:
    return BlockWord((letter, sum(1 for _ in run)) for letter, run in groupby(w))


def from_blocks(b: Iterable[Tuple[Hashable, int]]) -> Word:
    b = b if isinstance(b, BlockWord) else BlockWord(b)
    out: list = []
    for letter, e in b:
        out.extend((letter,) * e)
    return tuple(out)


def dual_word(w: Word) -> Word:
    """Reverse ``w`` and swap x0 <-> x1 (the duality involution on admissible words)."""
    return tuple(X1 if letter == X0 else X0 for letter in reversed(w))
