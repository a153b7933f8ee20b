from itertools import product
from math import pi

import mpmath
import pytest

from shufflemzv.algebra import ZetaExpansion
from shufflemzv.numeric import (
    NotAdmissible,
    PrecisionUnattainable,
    _evaluate,
    check_homomorphism,
    check_sum_formula,
    dual_composition,
    eval_expansion,
    zeta_eval,
)
from shufflemzv.words import Composition, parse_word

ZETA3 = float(mpmath.zeta(3))
ZETA5 = float(mpmath.zeta(5))

# closed forms independent of the nested series
KNOWN = {
    (2,): pi**2 / 6,
    (4,): pi**4 / 90,
    (6,): pi**6 / 945,
    (3,): ZETA3,
    (2, 1): ZETA3,
    (3, 1): pi**4 / 360,
    (2, 2): pi**4 / 120,
    (2, 1, 1): pi**4 / 90,
    (2, 2, 2): pi**6 / 5040,
    (4, 2): ZETA3**2 - 4 * pi**6 / 945 / 3,
    (2, 1, 1, 1): float(mpmath.zeta(5)),
}


@pytest.mark.parametrize("c, tol, expected", [
    ((2,), 1e-8, 1.6449340668),
    ((2, 1), 1e-6, 1.2020569),
    ((4,), 1e-10, 1.0823232337),
])
def test_zeta_eval_examples(c, tol, expected):
    r = zeta_eval(c, tol)
    assert r.error_bound <= tol
    assert abs(r.value - KNOWN[c]) <= r.error_bound
    assert r.value == pytest.approx(expected, abs=max(tol, 1e-10) + 1e-10)


@pytest.mark.parametrize("c", sorted(KNOWN))
@pytest.mark.parametrize("use_duality", [True, False])
def test_bounds_contain_closed_forms(c, use_duality):
    tol = 1e-6 if use_duality or len(c) < 3 else 1e-3
    r = zeta_eval(c, tol, use_duality=use_duality)
    assert abs(r.value - KNOWN[c]) <= r.error_bound <= tol


@pytest.mark.parametrize("c", [(2,), (2, 1), (3, 1), (2, 2), (2, 1, 1), (2, 2, 2), (2, 1, 2)])
@pytest.mark.parametrize("cutoff", [16, 100, 1000])
def test_bounds_hold_at_small_cutoffs(c, cutoff):
    # reference from a much larger cutoff with its own (tiny) bound
    ref = _evaluate(Composition(c), 2**20)
    r = _evaluate(Composition(c), cutoff)
    assert abs(r.value - ref.value) <= r.error_bound + ref.error_bound


def test_errors():
    with pytest.raises(NotAdmissible):
        zeta_eval((1, 2), 1e-4)
    with pytest.raises(ValueError):
        zeta_eval((2,), 1e-13)
    with pytest.raises(ValueError):
        zeta_eval((2,), 0.0)
    with pytest.raises(PrecisionUnattainable):
        zeta_eval((2, 1, 1, 1), 1e-6, use_duality=False, max_cutoff=10**5)


def test_monotone_refinement():
    for c in [(2,), (2, 1), (3, 1, 2), (2, 2, 1)]:
        results = [zeta_eval(c, tol) for tol in (1e-3, 1e-5, 1e-7, 1e-9)]
        for coarse, fine in zip(results, results[1:]):
            assert fine.error_bound <= coarse.error_bound
            assert fine.cutoff >= coarse.cutoff
            assert abs(fine.value - coarse.value) <= fine.error_bound + coarse.error_bound


def test_duality_map():
    assert dual_composition((2, 1)) == (3,)
    assert dual_composition((2, 1, 1)) == (4,)
    assert dual_composition((2, 2)) == (2, 2)
    assert dual_composition((3, 1, 2)) == (2, 3, 1)


def test_eval_expansion():
    r = eval_expansion(ZetaExpansion({(2, 2): 2, (3, 1): 4}), 1e-6)
    assert abs(r.value - (pi**2 / 6) ** 2) <= r.error_bound
    assert r.value == pytest.approx(2.7058080, abs=1e-6)
    empty = eval_expansion(ZetaExpansion(), 1e-6)
    assert (empty.value, empty.error_bound) == (0.0, 0.0)
    single = eval_expansion(ZetaExpansion({(4,): 1}), 1e-8)
    assert single == zeta_eval((4,), 1e-8)


@pytest.mark.parametrize("a, b, closed", [
    ("01", "01", (pi**2 / 6) ** 2),
    ("01", "001", pi**2 / 6 * ZETA3),
    ("0001", "01", pi**4 / 90 * pi**2 / 6),
])
def test_check_homomorphism_examples(a, b, closed):
    rep = check_homomorphism(parse_word(a), parse_word(b), 1e-4)
    assert rep.passed
    assert abs(rep.lhs - closed) <= rep.lhs_bound
    assert abs(rep.rhs - closed) <= rep.rhs_bound + 1e-12


def test_check_homomorphism_requires_admissible_words():
    with pytest.raises(NotAdmissible):
        check_homomorphism(parse_word("1"), parse_word("01"))


def test_homomorphism_all_pairs_to_length_six():
    from conftest import words_up_to
    ws = [w for w in words_up_to(6, 2) if w[0] == 0 and w[-1] == 1]
    for a, b in product(ws, ws):
        if len(a) + len(b) <= 6:
            assert check_homomorphism(a, b, 1e-4).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sum_formula(n):
    rep = check_sum_formula(n, 1e-5)
    assert rep.passed
    assert rep.discrepancy <= rep.bound + 1e-5
    if n == 4:
        assert abs(rep.lhs - pi**4 / 90) <= rep.lhs_bound
    if n == 5:
        assert abs(rep.rhs - ZETA5) <= rep.rhs_bound
    with pytest.raises(ValueError):
        check_sum_formula(2)
