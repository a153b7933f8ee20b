"""Integer linear combinations of words and the shuffle product.

Three independent engines compute ``a III b``:

* :func:`shuffle_brute` enumerates the C(m+n, m) position sets of ``a``;
* :func:`shuffle_pivot` splits at one letter of ``a`` and recurses;
* :func:`shuffle_blocks` recurses on run-length block words, splitting at the
  last letter of the first block of ``a``.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterable, Tuple, Union

import numpy as np

from .words import (
    BlockWord,
    Composition,
    Word,
    format_word,
    from_blocks,
    to_blocks,
    word_key,
    word_to_composition,
)

DEFAULT_CAP = 10**7


class ShuffleTooLarge(ValueError):
    """Raised before enumeration when C(m+n, m) exceeds the configured cap."""


_cap = DEFAULT_CAP


def get_cap() -> int:
    return _cap


def set_cap(cap: int) -> None:
    global _cap
    if cap < 1:
        raise ValueError("cap must be positive")
    _cap = int(cap)


def _check_cap(m: int, n: int, cap: int | None) -> None:
    cap = _cap if cap is None else cap
    mass = comb(m + n, m)
    if mass > cap:
        raise ShuffleTooLarge(
            f"shuffle of lengths {m} and {n} has {mass} interleavings, "
            f"too large for brute enumeration (cap {cap})"
        )


class _FormalSum(Mapping):
    """Immutable finite map from keys to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    @staticmethod
    def _sort_key(key):
        return key

    @staticmethod
    def _coerce_key(key):
        return key

    @staticmethod
    def _format_key(key) -> str:
        return str(key)

    def __init__(self, terms=None):
        out: Dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = self._coerce_key(key)
                c = out.get(key, 0) + int(c)
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        self._terms = out

    @classmethod
    def _from_clean(cls, terms: Dict):
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        return obj

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[object, int]]):
        """Aggregate ``(key, coefficient)`` pairs, summing repeated keys."""
        acc: Dict = {}
        for key, c in pairs:
            key = cls._coerce_key(key)
            acc[key] = acc.get(key, 0) + c
        return cls._from_clean(acc)

    def __getitem__(self, key):
        return self._terms[key]

    def get(self, key, default=0):
        return self._terms.get(key, default)

    def __iter__(self):
        return iter(sorted(self._terms, key=self._sort_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __eq__(self, other):
        if isinstance(other, _FormalSum):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: c for k, c in other.items() if c}
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return self._from_clean(acc)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return self._from_clean({k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def diff(self, other) -> Dict[object, Tuple[int, int]]:
        """Keys whose coefficients differ, mapped to ``(self_coeff, other_coeff)``."""
        keys = set(self._terms) | set(other)
        out = {}
        for k in sorted(keys, key=self._sort_key):
            a, b = self._terms.get(k, 0), other.get(k, 0)
            if a != b:
                out[k] = (a, b)
        return out

    def to_tsv(self) -> str:
        return "".join(f"{c}\t{self._format_key(k)}\n" for k, c in self.items())

    def __repr__(self) -> str:
        body = ", ".join(f"{self._format_key(k)!s}: {c}" for k, c in self.items())
        return f"{type(self).__name__}({{{body}}})"


class LinComb(_FormalSum):
    """Element of the shuffle algebra with integer coefficients, keyed by word."""

    __slots__ = ()
    _sort_key = staticmethod(word_key)
    _coerce_key = staticmethod(tuple)

    @staticmethod
    def _format_key(key) -> str:
        try:
            return format_word(key)
        except (TypeError, ValueError):
            return repr(key)

    @classmethod
    def word(cls, w: Word, coefficient: int = 1) -> "LinComb":
        return cls({tuple(w): coefficient})


class ZetaExpansion(_FormalSum):
    """Integer combination of multiple zeta values, keyed by composition."""

    __slots__ = ()
    _coerce_key = staticmethod(Composition)
    _sort_key = staticmethod(tuple)

    def weights(self) -> set:
        return {c.weight for c in self._terms}


def add(p: LinComb, q: LinComb) -> LinComb:
    return p + q


def scale(c: int, p: LinComb) -> LinComb:
    return c * p


def concat(*factors: Union[LinComb, Word]) -> LinComb:
    """Concatenation product extended bilinearly; bare words act as coefficient-1 terms.

    ``concat(p, w, q)`` is the sum of ``p_u q_v`` on ``u + w + v``.
    """
    acc: Dict[Word, int] = {(): 1}
    for f in factors:
        if isinstance(f, LinComb):
            terms = f._terms
        else:
            terms = {tuple(f): 1}
        nxt: Dict[Word, int] = {}
        for u, cu in acc.items():
            for v, cv in terms.items():
                key = u + v
                nxt[key] = nxt.get(key, 0) + cu * cv
        acc = nxt
    return LinComb._from_clean(acc)


def equal(p: _FormalSum, q: _FormalSum) -> Tuple[bool, Dict]:
    """Exact comparison returning ``(is_equal, differing terms)``."""
    d = p.diff(q)
    return (not d, d)


_HOLE = object()


def shuffle_plans(m: int, n: int):
    """All position sets of the first word inside [0, m+n), in lexicographic order."""
    return combinations(range(m + n), m)


def _brute_python(a: Word, b: Word) -> Dict[Word, int]:
    total = len(a) + len(b)
    acc: Dict[Word, int] = {}
    for positions in shuffle_plans(len(a), len(b)):
        out = [_HOLE] * total
        for i, p in enumerate(positions):
            out[p] = a[i]
        ib = 0
        for i in range(total):
            if out[i] is _HOLE:
                out[i] = b[ib]
                ib += 1
        w = tuple(out)
        acc[w] = acc.get(w, 0) + 1
    return acc


def _plan_masks(m: int, n: int) -> np.ndarray:
    """Boolean matrix with one row per shuffle plan; True marks a position of the first word.

    Built by the recursion on the first position (taken by the first word or
    by the second), one table row at a time.
    """
    # row[j] holds the plans for (i, j) at the current i
    prev = [np.zeros((1, j), dtype=bool) for j in range(n + 1)]
    for i in range(1, m + 1):
        cur = [np.ones((1, i), dtype=bool)]
        for j in range(1, n + 1):
            first_a = prev[j]
            first_b = cur[j - 1]
            block = np.empty((first_a.shape[0] + first_b.shape[0], i + j), dtype=bool)
            block[: first_a.shape[0], 0] = True
            block[: first_a.shape[0], 1:] = first_a
            block[first_a.shape[0] :, 0] = False
            block[first_a.shape[0] :, 1:] = first_b
            cur.append(block)
        prev = cur
    return prev[n]


def _brute_numpy(a: Word, b: Word, alphabet: list) -> Dict[Word, int]:
    # every plan is still enumerated; words are packed into base-|alphabet| integers
    m, n = len(a), len(b)
    total = m + n
    index = {letter: i for i, letter in enumerate(alphabet)}
    base = max(len(alphabet), 2)
    mask = _plan_masks(m, n)
    count = mask.shape[0]
    letters = np.empty((count, total), dtype=np.int64)
    letters[mask] = np.tile(np.array([index[x] for x in a], dtype=np.int64), count)
    letters[~mask] = np.tile(np.array([index[x] for x in b], dtype=np.int64), count)
    weights = base ** np.arange(total - 1, -1, -1, dtype=np.int64)
    packed, counts = np.unique(letters @ weights, return_counts=True)
    acc: Dict[Word, int] = {}
    for value, c in zip(packed.tolist(), counts.tolist()):
        digits = []
        for _ in range(total):
            value, d = divmod(value, base)
            digits.append(alphabet[d])
        acc[tuple(reversed(digits))] = c
    return acc


def shuffle_brute(a: Word, b: Word, cap: int | None = None) -> LinComb:
    """Sum of the interleavings of ``a`` and ``b``, one per shuffle plan.

    A plan is the set of positions occupied by ``a``; the C(m+n, m) plans are
    enumerated exhaustively.
    """
    a, b = tuple(a), tuple(b)
    m, n = len(a), len(b)
    _check_cap(m, n, cap)
    if not a or not b:
        return LinComb._from_clean({a + b: 1})
    alphabet = list(dict.fromkeys(a + b))
    if comb(m + n, m) >= 64 and max(len(alphabet), 2) ** (m + n) < 2**62:
        return LinComb._from_clean(_brute_numpy(a, b, alphabet))
    return LinComb._from_clean(_brute_python(a, b))


@lru_cache(maxsize=1 << 16)
def _pivot_rec(a: Word, b: Word) -> LinComb:
    if not a:
        return LinComb._from_clean({b: 1})
    if not b:
        return LinComb._from_clean({a: 1})
    return _pivot_split(a, b, (len(a) + 1) // 2)


def _pivot_split(a: Word, b: Word, k: int) -> LinComb:
    head, pivot, tail = a[: k - 1], a[k - 1 : k], a[k:]
    acc: Dict[Word, int] = {}
    for i in range(len(b) + 1):
        left = _pivot_rec(head, b[:i])
        right = _pivot_rec(tail, b[i:])
        for u, cu in left._terms.items():
            prefix = u + pivot
            for v, cv in right._terms.items():
                key = prefix + v
                acc[key] = acc.get(key, 0) + cu * cv
    return LinComb._from_clean(acc)


def shuffle_pivot(a: Word, b: Word, k: int, cap: int | None = None) -> LinComb:
    """Shuffle by splitting at the ``k``-th letter of ``a`` (1-based).

    Sums, over the number ``i`` of letters of ``b`` placed before ``a_k``,
    the products ``(a_1..a_{k-1} III b_1..b_i) a_k (a_{k+1}..a_m III b_{i+1}..b_n)``.
    Sub-shuffles recurse the same way, splitting at the middle letter.
    """
    a, b = tuple(a), tuple(b)
    if not 1 <= k <= len(a):
        raise ValueError(f"pivot {k} out of range [1, {len(a)}]")
    _check_cap(len(a), len(b), cap)
    return _pivot_split(a, b, k)


Blocks = Tuple[Tuple[object, int], ...]


def _block_concat(left: LinComb, middle: Word, right: LinComb, acc: Dict[Word, int]) -> None:
    for u, cu in left._terms.items():
        prefix = u + middle
        for v, cv in right._terms.items():
            key = prefix + v
            acc[key] = acc.get(key, 0) + cu * cv


@lru_cache(maxsize=1 << 16)
def _blocks_rec(a: Blocks, b: Blocks) -> LinComb:
    if not a:
        return LinComb._from_clean({from_blocks(b): 1})
    if not b:
        return LinComb._from_clean({from_blocks(a): 1})
    if len(a) == 1 and len(b) == 1 and a[0][0] == b[0][0]:
        letter, m = a[0]
        n = b[0][1]
        return LinComb._from_clean({(letter,) * (m + n): comb(m + n, m)})

    (y1, m1), rest = a[0], a[1:]
    head: Blocks = ((y1, m1 - 1),) if m1 > 1 else ()
    acc: Dict[Word, int] = {}

    # no letter of b before the last y1 of the first block
    _block_concat(LinComb._from_clean({(y1,) * m1: 1}), (), _shuffle_blocks_key(rest, b), acc)
    for j, (z, nj) in enumerate(b):
        for nj1 in range(1, nj + 1):
            prefix = b[:j] + ((z, nj1),)
            suffix = (((z, nj - nj1),) if nj > nj1 else ()) + b[j + 1 :]
            left = _shuffle_blocks_key(head, prefix)
            right = _shuffle_blocks_key(rest, _normalize(suffix))
            _block_concat(left, (y1,), right, acc)
    return LinComb._from_clean(acc)


def _normalize(blocks: Blocks) -> Blocks:
    return tuple(to_blocks(from_blocks(blocks))) if blocks else ()


def _shuffle_blocks_key(a: Blocks, b: Blocks) -> LinComb:
    # shuffle is commutative: memoize on the ordered pair
    if b < a:
        a, b = b, a
    return _blocks_rec(a, b)


def shuffle_blocks(a, b, cap: int | None = None) -> LinComb:
    """Shuffle two run-length block words (BlockWord or raw word tuples)."""
    a = a if isinstance(a, BlockWord) else BlockWord(a)
    b = b if isinstance(b, BlockWord) else BlockWord(b)
    _check_cap(a.length, b.length, cap)
    return _shuffle_blocks_key(tuple(a), tuple(b))


ENGINES: Dict[str, Callable[..., LinComb]] = {
    "brute": lambda a, b, cap=None: shuffle_brute(a, b, cap=cap),
    "pivot": lambda a, b, cap=None: (
        shuffle_pivot(a, b, 1, cap=cap) if a else shuffle_brute(a, b, cap=cap)
    ),
    "blocks": lambda a, b, cap=None: shuffle_blocks(to_blocks(a), to_blocks(b), cap=cap),
}


def shuffle(p, q, engine: str = "brute", cap: int | None = None) -> LinComb:
    """Bilinear shuffle of two words or linear combinations."""
    p = p if isinstance(p, LinComb) else LinComb.word(p)
    q = q if isinstance(q, LinComb) else LinComb.word(q)
    fn = ENGINES[engine]
    acc: Dict[Word, int] = {}
    for u, cu in p._terms.items():
        for v, cv in q._terms.items():
            for w, c in fn(u, v, cap=cap)._terms.items():
                acc[w] = acc.get(w, 0) + cu * cv * c
    return LinComb._from_clean(acc)


def zeta_image(p: LinComb) -> ZetaExpansion:
    """Termwise composition image x0^(s1-1) x1 ... -> (s1, ...)."""
    return ZetaExpansion.from_terms((word_to_composition(w), c) for w, c in p.items())
