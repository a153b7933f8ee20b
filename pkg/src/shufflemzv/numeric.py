"""Double-precision multiple zeta values from the nested series, with rigorous error bounds.

For a composition ``(s1, ..., sk)`` and cutoff ``N`` the partial sums

    P_j(x) = sum_{x >= n_j > ... > n_k >= 1} n_j^-s_j ... n_k^-s_k

are built level by level with cumulative sums, so one evaluation costs
O(N k).  The tail ``sum_{n > N} n^-s1 P_2(n - 1)`` is bracketed:

* below by ``P_2(N) * (N+1)^(1-s1) / (s1-1)``, since ``P_2`` is increasing;
* above by ``N^(1-s1) * int_0^inf e^(-(s1-1) v) Q_2(v + 1/N) dv``, where
  ``Q_j(u)`` is a polynomial with ``P_j(x) <= Q_j(log(x/N))`` for ``x >= N``,
  obtained recursively by comparing each inner sum with an integral.

The estimate is the partial sum plus the bracket midpoint; the reported bound
is the bracket half-width plus a summation round-off allowance.  When the
duality ``zeta(w) = zeta(tau(w))`` (reverse the word, swap x0 and x1) gives a
faster-converging series, the dual composition is summed instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .algebra import ZetaExpansion, shuffle_brute, zeta_image
from .words import Composition, Word, composition_to_word, dual_word, is_admissible, word_to_composition

DEFAULT_MAX_CUTOFF = 10**7
MIN_TOL = 1e-12
_START_CUTOFF = 1024
_EPS = np.finfo(float).eps


class NotAdmissible(ValueError):
    pass


class PrecisionUnattainable(ValueError):
    pass


@dataclass(frozen=True)
class EvalResult:
    value: float
    error_bound: float
    cutoff: int


def _laplace(q: Polynomial, sigma: float) -> float:
    # int_0^inf e^(-sigma v) q(v) dv
    return float(sum(c * factorial(i) / sigma ** (i + 1) for i, c in enumerate(q.coef)))


def _shift(q: Polynomial, eps: float) -> Polynomial:
    return q(Polynomial([eps, 1.0]))


def partial_sums(c: Sequence[int], cutoff: int) -> list:
    """Arrays ``P_j[x]`` for x = 0..cutoff, outermost level first."""
    n = np.arange(1, cutoff + 1, dtype=float)
    inner = np.ones(cutoff + 1)
    levels = []
    for s in reversed(c):
        terms = n ** (-float(s)) * inner[:-1]
        inner = np.concatenate(([0.0], np.cumsum(terms)))
        levels.append(inner)
    return levels[::-1]


def _evaluate(c: Composition, cutoff: int) -> EvalResult:
    N = cutoff
    levels = partial_sums(c, N)
    at_N = [float(p[N]) for p in levels]
    eps = 1.0 / N

    q = Polynomial([1.0])
    for j in range(len(c) - 1, 0, -1):
        s = c[j]
        shifted = _shift(q, eps)
        if s == 1:
            increment = shifted.integ()
        else:
            increment = Polynomial([N ** (1.0 - s) * _laplace(shifted, s - 1.0)])
        q = Polynomial([at_N[j]]) + increment

    sigma = c[0] - 1.0
    inner_at_N = at_N[1] if len(c) > 1 else 1.0
    tail_lo = inner_at_N * (N + 1.0) ** (-sigma) / sigma
    tail_hi = N ** (-sigma) * _laplace(_shift(q, eps), sigma)
    value = at_N[0] + 0.5 * (tail_lo + tail_hi)
    roundoff = 2.0 * len(c) * N * _EPS * value
    return EvalResult(float(value), float(0.5 * (tail_hi - tail_lo) + roundoff), N)


def dual_composition(c: Sequence[int]) -> Composition:
    return word_to_composition(dual_word(composition_to_word(c)))


@lru_cache(maxsize=4096)
def _zeta_eval_cached(c: Composition, tol: float, max_cutoff: int, use_duality: bool) -> EvalResult:
    target = c
    if use_duality:
        dual = dual_composition(c)
        probe = _START_CUTOFF * 4
        if dual != c and _evaluate(dual, probe).error_bound < _evaluate(c, probe).error_bound:
            target = dual
    N = _START_CUTOFF
    while N <= max_cutoff:
        res = _evaluate(target, N)
        if res.error_bound <= tol:
            return res
        N *= 2
    raise PrecisionUnattainable(
        f"zeta{tuple(c)} needs a cutoff above {max_cutoff} for tol={tol:g}: "
        "precision unattainable at desk scale"
    )


def zeta_eval(c: Sequence[int], tol: float = 1e-8, max_cutoff: int = DEFAULT_MAX_CUTOFF,
              use_duality: bool = True) -> EvalResult:
    """Evaluate zeta(c) with ``|value - zeta(c)| <= error_bound <= tol``."""
    c = Composition(c)
    if not c.admissible:
        raise NotAdmissible(f"zeta{tuple(c)} diverges: the first part must be >= 2")
    if not tol >= MIN_TOL:
        raise ValueError(f"tol must be at least {MIN_TOL:g} in double precision, got {tol!r}")
    return _zeta_eval_cached(c, float(tol), int(max_cutoff), bool(use_duality))


def eval_expansion(z: ZetaExpansion, tol: float = 1e-8, **kwargs) -> EvalResult:
    """Coefficient-weighted sum of MZVs; bounds add with the coefficients' magnitudes."""
    value = bound = 0.0
    cutoff = 0
    for comp, coeff in z.items():
        r = zeta_eval(comp, tol, **kwargs)
        value += coeff * r.value
        bound += abs(coeff) * r.error_bound
        cutoff = max(cutoff, r.cutoff)
    return EvalResult(value, bound, cutoff)


@dataclass(frozen=True)
class NumericCheck:
    lhs: float
    rhs: float
    lhs_bound: float
    rhs_bound: float
    tol: float
    details: dict = field(default_factory=dict, compare=False)

    @property
    def discrepancy(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def bound(self) -> float:
        return self.lhs_bound + self.rhs_bound

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.bound + self.tol


def check_homomorphism(a: Word, b: Word, tol: float = 1e-4, **kwargs) -> NumericCheck:
    """Compare zeta(a) zeta(b) with the MZV image of ``a III b``."""
    for w in (a, b):
        if not is_admissible(w):
            raise NotAdmissible("both words must start with x0 and end with x1")
    za = zeta_eval(word_to_composition(a), tol, **kwargs)
    zb = zeta_eval(word_to_composition(b), tol, **kwargs)
    product = za.value * zb.value
    product_bound = (abs(za.value) * zb.error_bound + abs(zb.value) * za.error_bound
                     + za.error_bound * zb.error_bound)
    expansion = zeta_image(shuffle_brute(a, b))
    rhs = eval_expansion(expansion, tol, **kwargs)
    return NumericCheck(product, rhs.value, product_bound, rhs.error_bound, tol,
                        {"expansion": expansion})


def check_sum_formula(n: int, tol: float = 1e-5, **kwargs) -> NumericCheck:
    """Compare sum_{i=2}^{n-1} zeta(i, n-i) with zeta(n)."""
    if n < 3:
        raise ValueError(f"the sum formula needs n >= 3, got {n}")
    lhs = eval_expansion(ZetaExpansion({(i, n - i): 1 for i in range(2, n)}), tol, **kwargs)
    rhs = zeta_eval((n,), tol, **kwargs)
    return NumericCheck(lhs.value, rhs.value, lhs.error_bound, rhs.error_bound, tol)

