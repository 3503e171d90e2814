import itertools
from fractions import Fraction

import pytest

from gfcodec import (
    class_covering_radius,
    entropy_bound_check,
    enumerate_classes,
    enumerate_code,
    global_covering_radius,
    residual_count,
    symbol_weight,
    tail_bound,
    tail_bound_montecarlo,
    universal_bound_check,
    weight_enumerator,
)
from gfcodec.errors import InvalidSubfieldDegree, TooLarge

from conftest import get_tower


def test_weight_enumerator_examples():
    part3 = enumerate_classes(3, 2)
    assert weight_enumerator(part3, 2) == [1, 1, 3, 3]
    part15 = enumerate_classes(15, 2)
    coeffs = weight_enumerator(part15, 2)
    assert coeffs[0] == 1 and coeffs[1] == 1 and coeffs[2] == 3
    assert sum(coeffs) == 2**15
    part1 = enumerate_classes(1, 3)
    assert weight_enumerator(part1, 3) == [1, 2]


def test_enumerate_code_gf4(gf4):
    part = enumerate_classes(3, 2)
    words = list(enumerate_code(gf4, part))
    assert len(words) == 8
    assert len({tuple(x.value for x in w) for w in words}) == 8


@pytest.mark.parametrize(
    "name,n", [("gf4", 3), ("gf4", 1), ("gf16", 15), ("gf16", 5), ("gf9", 8)]
)
def test_weight_enumerator_matches_exhaustive(name, n):
    t = get_tower(name)
    part = enumerate_classes(n, t.q)
    coeffs = weight_enumerator(part, t.q)
    hist = [0] * (n + 1)
    for w in enumerate_code(t, part):
        hist[symbol_weight(w)] += 1
    while len(hist) > len(coeffs):
        assert hist[-1] == 0
        hist.pop()
    assert hist == coeffs
    assert sum(coeffs) == t.q**n


def test_too_large():
    t = get_tower("gf16")
    part = enumerate_classes(255, 2)
    with pytest.raises(TooLarge):
        list(enumerate_code(t, part))


def test_code_is_K_linear_not_L_linear(gf4):
    t = get_tower("gf4")
    part = enumerate_classes(3, 2)
    words = {tuple(x.value for x in w) for w in enumerate_code(t, part)}
    # K-linear: closed under addition
    for w1 in list(words)[:8]:
        for w2 in list(words)[:8]:
            s = tuple(t.add(t.el(a), t.el(b)).value for a, b in zip(w1, w2))
            assert s in words
    # not L-linear: alpha * all-one word leaves the code
    ones = (1, 1, 1)
    assert ones in words
    scaled = tuple(t.mul(t.alpha, t.el(v)).value for v in ones)
    assert scaled not in words


def test_class_covering_radius():
    assert class_covering_radius(2, 4) == 2
    assert class_covering_radius(4, 4) == 3
    assert class_covering_radius(2, 2) == 1
    assert class_covering_radius(1, 1) == 0
    with pytest.raises(InvalidSubfieldDegree):
        class_covering_radius(3, 4)


def test_global_covering_radius_formulas():
    part15 = enumerate_classes(15, 2)
    assert global_covering_radius(part15, 4) == 15 - 3
    part3 = enumerate_classes(3, 2)
    assert global_covering_radius(part3, 2) == 2
    # no class of length m -> radius n
    part5 = enumerate_classes(5, 2)
    assert part5.lengths == [1, 4]
    # for a tower with m = 8 ord_5(2) = 4 < m, so radius would be n
    assert global_covering_radius(part5, 8) == 5


def test_global_covering_radius_brute_force(gf4):
    # max over 64 ambient vectors of min distance to the 8 codewords
    t = gf4
    part = enumerate_classes(3, 2)
    words = [list(w) for w in enumerate_code(t, part)]
    radius = 0
    for vals in itertools.product(range(4), repeat=3):
        g = [t.el(v) for v in vals]
        dist = min(sum(1 for x, y in zip(g, f) if x != y) for f in words)
        radius = max(radius, dist)
    assert radius == 2 == global_covering_radius(part, t.m)


def test_tail_bound_examples():
    exact, clamped = tail_bound(2, 4, 2, 1)
    assert exact == Fraction(1, 2) == clamped
    exact, clamped = tail_bound(2, 4, 2, 2)
    assert exact == Fraction(1, 64)
    exact, clamped = tail_bound(2, 4, 2, 0)
    assert exact >= 1 and clamped == 1


def test_universal_bound_examples():
    lhs, rhs, holds = universal_bound_check(3, 2, 2, 1)
    assert (lhs, rhs, holds) == (80, 64, True)
    lhs, rhs, holds = universal_bound_check(3, 2, 2, 0)
    assert (lhs, rhs, holds) == (8, 64, False)
    _, _, holds = universal_bound_check(3, 2, 2, 3)
    assert holds  # s = n always holds


def test_entropy_bound_examples():
    lhs, rhs, sat = entropy_bound_check(0, 2, 1)
    assert lhs == pytest.approx(1.0) and sat
    lhs, rhs, sat = entropy_bound_check(0, 2, 4)
    assert not sat
    lhs, rhs, sat = entropy_bound_check(0.5, 2, 4)
    assert lhs == pytest.approx(2 + 0.5 * 3.9068905956, abs=1e-6)
    assert not sat
    lhs, rhs, sat = entropy_bound_check(0.5, 2, 2)
    assert lhs == pytest.approx(2 + 0.5 * 1.5849625007, abs=1e-6)
    assert sat


def test_residual_count():
    assert residual_count(3, 4, 1) == (9, 4)
    assert residual_count(10, 16, 0)[0] == 1
    assert residual_count(3, 4, 3)[0] == 27


def test_montecarlo_tail(gf16):
    emp = tail_bound_montecarlo(gf16, 2, 20000, seed=123)
    # exact probabilities: Pr(M>=1) = 7/16, Pr(M>=2) = 1/64
    assert emp[1] == pytest.approx(7 / 16, abs=0.02)
    assert emp[2] == pytest.approx(1 / 64, abs=0.005)
    for r in (1, 2):
        bound = float(tail_bound(2, 4, 2, r)[1])
        assert emp[r] <= bound + 3.29 * (bound * (1 - bound) / 20000) ** 0.5 + 1e-9
    # deterministic for a fixed seed
    assert emp == tail_bound_montecarlo(gf16, 2, 20000, seed=123)


def test_montecarlo_degenerate(gf4):
    # ell = m: every value admissible, so M >= 1 always
    emp = tail_bound_montecarlo(gf4, 2, 1000, seed=1)
    assert emp[1] == 1.0
    with pytest.raises(ValueError):
        tail_bound_montecarlo(gf4, 2, 0, seed=1)
