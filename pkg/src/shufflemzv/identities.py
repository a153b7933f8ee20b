"""Closed-form shuffle identities and restricted decomposition formulas.

Every generator here builds its result directly from a closed form (binomial
weights times concatenations of powers and gap sums); nothing calls a shuffle
engine, so the engines can serve as independent oracles.

Word-level generators return a :class:`LinComb`; the MZV-level generators
return a :class:`ZetaExpansion` assembled from the composition formulas
themselves rather than by mapping the word-level output.  The ``*_terms``
generators yield unaggregated :class:`TraceTerm` records.

Reading of the two-strings generator (``theorem_1_3``), fixed by oracle
equivalence at small parameters:

* branch ``s1``: the gap sum after ``x0^(m1+n)`` has ``k + 1`` slots, and its
  last slot merges with the x0 run of the second factor;
* branch ``t1``: the second gap sum has ``t1 + 1`` slots;
* branch ``k1`` at the MZV level: when ``j1 + k - k1 = 0`` the string
  ``{1}^(-1)`` is read as fusing its two neighbouring parts ``a, b`` into
  ``a + b - 1`` (the x0 runs on either side touch).
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterator, NamedTuple, Sequence, Tuple

from .algebra import LinComb, ZetaExpansion, concat
from .words import Composition, Word, X0, X1, x0, x1


class TraceTerm(NamedTuple):
    branch: str
    indices: Tuple[Tuple[str, int], ...]
    key: object
    coefficient: int


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total`` (lex order)."""
    if parts < 1:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts < 1 or total < parts:
        return
    for w in weak_compositions(total - parts, parts):
        yield tuple(p + 1 for p in w)


def _require_positive(**params: int) -> None:
    for name, v in params.items():
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"parameter {name} must be a positive integer, got {v!r}")


def _gap_word(gaps: Sequence[int]) -> Word:
    # x0^g1 x1 x0^g2 x1 ... x1 x0^gp
    out: list = []
    for i, g in enumerate(gaps):
        if i:
            out.append(X1)
        out.extend((X0,) * g)
    return tuple(out)


def block_sum_B(total: int, slots: int) -> LinComb:
    """Sum of x0^g1 x1 x0^g2 ... x1 x0^gp over weak compositions g of ``total``.

    Equals ``x0^total III x1^(slots-1)``.
    """
    if total < 0 or slots < 1:
        raise ValueError(f"block_sum_B needs total >= 0 and slots >= 1, got {total}, {slots}")
    return LinComb._from_clean({_gap_word(g): 1 for g in weak_compositions(total, slots)})


B = block_sum_B


# --- power and mixed-block identities -------------------------------------------

IDENTITY_ARITY: Dict[str, Tuple[str, ...]] = {
    "E9": ("m", "n"),
    "E10": ("m", "n"),
    "E11": ("m", "n"),
    "E12": ("m", "n"),
    "E13": ("m", "n", "k"),
    "E14": ("m", "n", "k"),
    "E15": ("m", "n", "k"),
    "E16": ("m", "n", "k"),
    "E17": ("m", "n", "k", "s"),
    "E18": ("m", "n", "k", "s"),
    "E19": ("m", "n", "k", "s"),
    "E20": ("m", "n", "k", "s"),
    "E21": ("m", "n", "k", "s", "t"),
    "E22": ("m", "n", "k", "s", "t"),
}


def identity_lhs(tag: str, *params: int) -> Tuple[Word, Word]:
    """The two words whose shuffle the identity ``tag`` expands."""
    tag = tag.upper()
    if tag not in IDENTITY_ARITY:
        raise ValueError(f"unknown identity {tag!r}")
    names = IDENTITY_ARITY[tag]
    if len(params) != len(names):
        raise ValueError(f"{tag} takes parameters {names}, got {len(params)} values")
    _require_positive(**dict(zip(names, params)))
    m, n, *rest = params
    k, s, t = (list(rest) + [0, 0, 0])[:3]
    return {
        "E9": (x0(m), x0(n)),
        "E10": (x1(m), x1(n)),
        "E11": (x0(m), x1(n)),
        "E12": (x1(m), x0(n)),
        "E13": (x1(m), x1(n) + x0(k)),
        "E14": (x0(m), x1(n) + x0(k)),
        "E15": (x1(m), x0(n) + x1(k)),
        "E16": (x0(m), x0(n) + x1(k)),
        "E17": (x1(m), x1(n) + x0(k) + x1(s)),
        "E18": (x0(m), x0(n) + x1(k) + x0(s)),
        "E19": (x1(m), x0(n) + x1(k) + x0(s)),
        "E20": (x0(m), x1(n) + x0(k) + x1(s)),
        "E21": (x0(m), x0(n) + x1(k) + x0(s) + x1(t)),
        "E22": (x1(m), x0(n) + x1(k) + x0(s) + x1(t)),
    }[tag]


def _parts(total: int, count: int):
    return weak_compositions(total, count)


def mixed_identity(tag: str, *params: int) -> LinComb:
    """Closed form of the identity ``tag`` (``"E9"`` .. ``"E22"``) at ``params``."""
    identity_lhs(tag, *params)  # validates tag and parameters
    tag = tag.upper()
    m, n, *rest = params
    k, s, t = (list(rest) + [0, 0, 0])[:3]
    out = LinComb()

    if tag == "E9":
        return LinComb({x0(m + n): comb(m + n, m)})
    if tag == "E10":
        return LinComb({x1(m + n): comb(m + n, m)})
    if tag == "E11":
        return B(m, n + 1)
    if tag == "E12":
        return B(n, m + 1)

    if tag == "E13":
        for m1, m2 in _parts(m, 2):
            out += comb(m1 + n - 1, n - 1) * concat(x1(m1 + n), B(k, m2 + 1))
    elif tag == "E14":
        for m1, m2 in _parts(m, 2):
            out += comb(m2 + k - 1, k - 1) * concat(B(m1, n + 1), x0(m2 + k))
    elif tag == "E15":
        for m1, m2 in _parts(m, 2):
            out += comb(m2 + k - 1, k - 1) * concat(B(n, m1 + 1), x1(m2 + k))
    elif tag == "E16":
        for m1, m2 in _parts(m, 2):
            out += comb(m1 + n - 1, n - 1) * concat(x0(m1 + n), B(m2, k + 1))
    elif tag == "E17":
        for m1, m2, m3 in _parts(m, 3):
            c = comb(m1 + n - 1, n - 1) * comb(m3 + s - 1, s - 1)
            out += c * concat(x1(m1 + n), B(k, m2 + 1), x1(m3 + s))
    elif tag == "E18":
        for m1, m2, m3 in _parts(m, 3):
            c = comb(m1 + n - 1, n - 1) * comb(m3 + s - 1, s - 1)
            out += c * concat(x0(m1 + n), B(m2, k + 1), x0(m3 + s))
    elif tag == "E19":
        for m1, m2, m3 in _parts(m, 3):
            c = comb(m2 + k - 1, k - 1)
            out += c * concat(B(n - 1, m1 + 1), x0(), x1(m2 + k), B(s, m3 + 1))
    elif tag == "E20":
        for m1, m2, m3 in _parts(m, 3):
            c = comb(m2 + k - 1, k - 1)
            out += c * concat(B(m1, n), x1(), x0(m2 + k), B(m3, s + 1))
    elif tag == "E21":
        for m1, m2, m3, m4 in _parts(m, 4):
            c = comb(m1 + n - 1, n - 1) * comb(m3 + s - 1, s - 1)
            out += c * concat(x0(m1 + n), B(m2, k), x1(), x0(m3 + s), B(m4, t + 1))
    elif tag == "E22":
        for m1, m2, m3, m4 in _parts(m, 4):
            c = comb(m2 + k - 1, k - 1) * comb(m4 + t - 1, t - 1)
            out += c * concat(B(n, m1 + 1), x1(m2 + k), x0(), B(s - 1, m3 + 1), x1(m4 + t))
    return out


# --- one string of 1's each ----------------------------------------------------


def theorem_1_1_word_terms(m: int, n: int, j: int, k: int) -> Iterator[TraceTerm]:
    """Unaggregated terms of x0^m x1^j III x0^n x1^k."""
    _require_positive(m=m, n=n, j=j, k=k)
    for n1 in range(n + 1):
        c1 = comb(m - 1 + n1, m - 1)
        for j1, j2 in weak_compositions(j, 2):
            c = c1 * comb(j2 + k - 1, k - 1)
            for alpha in weak_compositions(n - n1, j1 + 1):
                w = x0(m + n1) + _gap_word(alpha) + x1(j2 + k)
                yield TraceTerm("n1", (("n1", n1), ("j1", j1), ("j2", j2), ("alpha", alpha)), w, c)
    for k1 in range(1, k + 1):
        for m1, m2 in weak_compositions(m - 1, 2):
            c = comb(m1 + n - 1, n - 1) * comb(j + k - k1, j)
            for beta in weak_compositions(m2, k1 + 1):
                w = x0(m1 + n) + _gap_word(beta) + x0() + x1(j + k - k1)
                yield TraceTerm("k1", (("k1", k1), ("m1", m1), ("m2", m2), ("beta", beta)), w, c)


def theorem_1_1_words(m: int, n: int, j: int, k: int) -> LinComb:
    return LinComb.from_terms((t.key, t.coefficient) for t in theorem_1_1_word_terms(m, n, j, k))


def theorem_1_1_zeta_terms(m: int, n: int, j: int, k: int) -> Iterator[TraceTerm]:
    """Unaggregated terms of zeta(m+1, {1}^(j-1)) zeta(n+1, {1}^(k-1))."""
    _require_positive(m=m, n=n, j=j, k=k)
    for n1 in range(n + 1):
        c1 = comb(m - 1 + n1, m - 1)
        for j1, j2 in weak_compositions(j, 2):
            c = c1 * comb(j2 + k - 1, k - 1)
            for alpha in compositions(n - n1 + j1 + 1, j1 + 1):
                parts = (alpha[0] + m + n1,) + alpha[1:] + (1,) * (j2 + k - 1)
                yield TraceTerm("n1", (("n1", n1), ("j1", j1), ("j2", j2), ("alpha", alpha)),
                                Composition(parts), c)
    for t in range(k):
        for m1, m2 in weak_compositions(m - 1, 2):
            c = comb(m1 + n - 1, n - 1) * comb(j + t, j)
            for beta in compositions(m2 + k - t + 1, k - t + 1):
                parts = ((beta[0] + m1 + n,) + beta[1:-1] + (beta[-1] + 1,)
                         + (1,) * (j + t - 1))
                yield TraceTerm("t", (("t", t), ("m1", m1), ("m2", m2), ("beta", beta)),
                                Composition(parts), c)


def theorem_1_1_zeta(m: int, n: int, j: int, k: int) -> ZetaExpansion:
    return ZetaExpansion.from_terms((t.key, t.coefficient) for t in theorem_1_1_zeta_terms(m, n, j, k))


def euler_terms(m: int, n: int) -> Iterator[TraceTerm]:
    _require_positive(m=m, n=n)
    for j in range(1, n + 2):
        yield TraceTerm("first", (("j", j),), Composition((m + n + 2 - j, j)), comb(m + n - j + 1, m))
    for j in range(1, m + 2):
        yield TraceTerm("second", (("j", j),), Composition((m + n + 2 - j, j)), comb(m + n - j + 1, n))


def euler_decomposition(m: int, n: int) -> ZetaExpansion:
    """Depth-two expansion of zeta(m+1) zeta(n+1)."""
    return ZetaExpansion.from_terms((t.key, t.coefficient) for t in euler_terms(m, n))


# --- one string times two strings of 1's -----------------------------------------


def theorem_1_3_word_terms(m: int, n: int, j: int, k: int, s: int, t: int) -> Iterator[TraceTerm]:
    """Unaggregated terms of x0^m x1^j III x0^n x1^k x0^s x1^t."""
    _require_positive(m=m, n=n, j=j, k=k, s=s, t=t)
    for n1 in range(n + 1):
        c1 = comb(m - 1 + n1, m - 1)
        for j1, j2, j3, j4 in weak_compositions(j, 4):
            c = c1 * comb(j2 + k - 1, k - 1) * comb(j4 + t - 1, t - 1)
            for alpha in weak_compositions(n - n1, j1 + 1):
                for alpha_bar in weak_compositions(s - 1, j3 + 1):
                    w = (x0(m + n1) + _gap_word(alpha) + x1(j2 + k) + x0()
                         + _gap_word(alpha_bar) + x1(j4 + t))
                    idx = (("n1", n1), ("j", (j1, j2, j3, j4)), ("alpha", alpha), ("alpha_bar", alpha_bar))
                    yield TraceTerm("n1", idx, w, c)
    for k1 in range(1, k + 1):
        for m1, m2 in weak_compositions(m - 1, 2):
            c1 = comb(m1 + n - 1, n - 1)
            for beta in weak_compositions(m2, k1 + 1):
                for j1, j2, j3 in weak_compositions(j, 3):
                    c = c1 * comb(j1 + k - k1, k - k1) * comb(j3 + t - 1, t - 1)
                    for beta_bar in weak_compositions(s - 1, j2 + 1):
                        w = (x0(m1 + n) + _gap_word(beta) + x0() + x1(j1 + k - k1) + x0()
                             + _gap_word(beta_bar) + x1(j3 + t))
                        idx = (("k1", k1), ("m", (m1, m2)), ("beta", beta), ("j", (j1, j2, j3)),
                               ("beta_bar", beta_bar))
                        yield TraceTerm("k1", idx, w, c)
    for s1 in range(1, s + 1):
        for m1, m2, m3 in weak_compositions(m - 1, 3):
            c1 = comb(m1 + n - 1, n - 1) * comb(m3 + s1 - 1, s1 - 1)
            for gamma in weak_compositions(m2, k + 1):
                for j1, j2 in weak_compositions(j, 2):
                    c = c1 * comb(j2 + t - 1, t - 1)
                    for gamma_bar in weak_compositions(s - s1, j1 + 1):
                        w = (x0(m1 + n) + _gap_word(gamma) + x0(m3 + s1 + 1)
                             + _gap_word(gamma_bar) + x1(j2 + t))
                        idx = (("s1", s1), ("m", (m1, m2, m3)), ("gamma", gamma), ("j", (j1, j2)),
                               ("gamma_bar", gamma_bar))
                        yield TraceTerm("s1", idx, w, c)
    for t1 in range(1, t + 1):
        for m1, m2, m3, m4 in weak_compositions(m - 1, 4):
            c = comb(m1 + n - 1, n - 1) * comb(m3 + s - 1, s - 1) * comb(j + t - t1, j)
            for delta in weak_compositions(m2, k):
                for delta_bar in weak_compositions(m4, t1 + 1):
                    w = (x0(m1 + n) + _gap_word(delta) + x1() + x0(m3 + s)
                         + _gap_word(delta_bar) + x0() + x1(j + t - t1))
                    idx = (("t1", t1), ("m", (m1, m2, m3, m4)), ("delta", delta), ("delta_bar", delta_bar))
                    yield TraceTerm("t1", idx, w, c)


def theorem_1_3_words(m: int, n: int, j: int, k: int, s: int, t: int) -> LinComb:
    return LinComb.from_terms(
        (tt.key, tt.coefficient) for tt in theorem_1_3_word_terms(m, n, j, k, s, t)
    )


def _fuse(head: Tuple[int, ...], ones: int, tail: Tuple[int, ...]) -> Tuple[int, ...]:
    # a string {1}^(-1) between parts a and b fuses them into a + b - 1
    if ones >= 0:
        return head + (1,) * ones + tail
    if ones == -1 and head and tail:
        return head[:-1] + (head[-1] + tail[0] - 1,) + tail[1:]
    raise ValueError(f"cannot place {{1}}^{ones}")


def theorem_1_3_zeta_terms(m: int, n: int, j: int, k: int, s: int, t: int) -> Iterator[TraceTerm]:
    """Unaggregated terms of zeta(m+1, {1}^(j-1)) zeta(n+1, {1}^(k-1), s+1, {1}^(t-1))."""
    _require_positive(m=m, n=n, j=j, k=k, s=s, t=t)
    for n1 in range(n + 1):
        c1 = comb(m - 1 + n1, m - 1)
        for j1, j2, j3, j4 in weak_compositions(j, 4):
            c = c1 * comb(j2 + k - 1, k - 1) * comb(j4 + t - 1, t - 1)
            for alpha in compositions(n - n1 + j1 + 1, j1 + 1):
                for ab in compositions(s + j3, j3 + 1):
                    parts = ((alpha[0] + m + n1,) + alpha[1:] + (1,) * (j2 + k - 1)
                             + (ab[0] + 1,) + ab[1:] + (1,) * (j4 + t - 1))
                    idx = (("n1", n1), ("j", (j1, j2, j3, j4)), ("alpha", alpha), ("alpha_bar", ab))
                    yield TraceTerm("n1", idx, Composition(parts), c)
    for k1 in range(1, k + 1):
        for m1 in range(m):
            c1 = comb(m1 + n - 1, n - 1)
            for j1, j2, j3 in weak_compositions(j, 3):
                c = c1 * comb(j1 + k - k1, k - k1) * comb(j3 + t - 1, t - 1)
                for beta in compositions(m - m1 + k1, k1 + 1):
                    for bb in compositions(s + j2, j2 + 1):
                        head = (beta[0] + m1 + n,) + beta[1:-1] + (beta[-1] + 1,)
                        tail = (bb[0] + 1,) + bb[1:] + (1,) * (j3 + t - 1)
                        parts = _fuse(head, j1 + k - k1 - 1, tail)
                        idx = (("k1", k1), ("m1", m1), ("j", (j1, j2, j3)), ("beta", beta),
                               ("beta_bar", bb))
                        yield TraceTerm("k1", idx, Composition(parts), c)
    for s1 in range(1, s + 1):
        for m1, m2, m3 in weak_compositions(m - 1, 3):
            c1 = comb(m1 + n - 1, n - 1) * comb(m3 + s1 - 1, s1 - 1)
            for j1, j2 in weak_compositions(j, 2):
                c = c1 * comb(j2 + t - 1, t - 1)
                for gamma in compositions(m2 + k + 1, k + 1):
                    for gb in compositions(s - s1 + j1 + 1, j1 + 1):
                        parts = ((gamma[0] + m1 + n,) + gamma[1:-1]
                                 + (gamma[-1] + gb[0] + m3 + s1,) + gb[1:] + (1,) * (j2 + t - 1))
                        idx = (("s1", s1), ("m", (m1, m2, m3)), ("j", (j1, j2)), ("gamma", gamma),
                               ("gamma_bar", gb))
                        yield TraceTerm("s1", idx, Composition(parts), c)
    for t1 in range(1, t + 1):
        for m1, m2, m3, m4 in weak_compositions(m - 1, 4):
            c = comb(m1 + n - 1, n - 1) * comb(m3 + s - 1, s - 1) * comb(j + t - t1, j)
            for delta in compositions(m2 + k, k):
                for db in compositions(m4 + t1 + 1, t1 + 1):
                    parts = ((delta[0] + m1 + n,) + delta[1:] + (m3 + s + db[0],) + db[1:-1]
                             + (db[-1] + 1,) + (1,) * (j + t - t1 - 1))
                    idx = (("t1", t1), ("m", (m1, m2, m3, m4)), ("delta", delta), ("delta_bar", db))
                    yield TraceTerm("t1", idx, Composition(parts), c)


def theorem_1_3_zeta(m: int, n: int, j: int, k: int, s: int, t: int) -> ZetaExpansion:
    return ZetaExpansion.from_terms(
        (tt.key, tt.coefficient) for tt in theorem_1_3_zeta_terms(m, n, j, k, s, t)
    )


# --- binomial sums -----------------------------------------------------------------


def hockey_stick(m: int, k: int) -> Tuple[int, int]:
    """``(sum_{s=0}^{k} C(m-1+s, m-1), C(m+k, m))``."""
    if m < 1 or k < 0:
        raise ValueError(f"hockey_stick needs m >= 1 and k >= 0, got m={m}, k={k}")
    return sum(comb(m - 1 + s, m - 1) for s in range(k + 1)), comb(m + k, m)


def hockey_stick_tail(m: int, k: int, n: int) -> Tuple[int, int]:
    """``(sum_{t=k}^{n} C(m-1+n-t, m-1), C(m+n-k, m))``."""
    if m < 1 or k < 0:
        raise ValueError(f"hockey_stick_tail needs m >= 1 and k >= 0, got m={m}, k={k}")
    if k > n:
        raise ValueError(f"hockey_stick_tail needs k <= n, got k={k}, n={n}")
    return sum(comb(m - 1 + n - t, m - 1) for t in range(k, n + 1)), comb(m + n - k, m)


# --- lookup used by the CLI and scripts --------------------------------------------

WORD_GENERATORS = {
    "thm11": (("m", "n", "j", "k"), theorem_1_1_word_terms,
              lambda m, n, j, k: (x0(m) + x1(j), x0(n) + x1(k))),
    "thm13": (("m", "n", "j", "k", "s", "t"), theorem_1_3_word_terms,
              lambda m, n, j, k, s, t: (x0(m) + x1(j), x0(n) + x1(k) + x0(s) + x1(t))),
}

ZETA_GENERATORS = {
    "euler": (("m", "n"), euler_terms),
    "thm11": (("m", "n", "j", "k"), theorem_1_1_zeta_terms),
    "thm13": (("m", "n", "j", "k", "s", "t"), theorem_1_3_zeta_terms),
}
