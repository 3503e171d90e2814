import itertools
import random

import pytest

from gfcodec import (
    OrbitSeedVector,
    anchor_costs_fast,
    anchor_seed,
    best_seed,
    decode_residual,
    decode_seeds,
    encode_residual,
    enumerate_classes,
    expand_seeds,
    global_min_support,
    normalize_class,
    random_orbit_seeds,
    recover_seed_majority,
    storage_cost,
    symbol_weight,
)
from gfcodec.errors import IndexNotInClass, NormalBasisMissing
from gfcodec.residual import ceil_log

from conftest import TOWER_CONFIGS, get_tower


def _class_with_leader(part, leader):
    return next(c for c in part.classes if c.leader == leader)


def test_normalize_class_examples(gf16):
    t = gf16
    part = enumerate_classes(15, 2)
    cls = _class_with_leader(part, 5)
    a = t.alpha
    g = [t.zero] * 15
    g[5], g[10] = t.pow(a, 5), t.pow(a, 10)
    assert normalize_class(t, g, cls) == [t.pow(a, 5), t.pow(a, 5)]
    g[5] = g[10] = t.zero
    assert normalize_class(t, g, cls) == [t.zero, t.zero]
    g[5], g[10] = a, t.zero
    assert normalize_class(t, g, cls) == [a, t.zero]


def test_best_seed_examples(gf4, gf16):
    t16 = gf16
    part15 = enumerate_classes(15, 2)
    cls = _class_with_leader(part15, 5)
    a = t16.alpha
    g = [t16.zero] * 15
    g[5], g[10] = t16.pow(a, 5), t16.pow(a, 10)
    seed, matches = best_seed(t16, g, cls)
    assert seed == t16.pow(a, 5) and matches == 2

    # tie between alpha and 0 breaks to the smaller canonical integer
    t = gf4
    part3 = enumerate_classes(3, 2)
    cls3 = _class_with_leader(part3, 1)
    g3 = [t.zero, t.alpha, t.zero]
    seed, matches = best_seed(t, g3, cls3)
    assert seed == t.zero and matches == 1

    # all normalized values inadmissible -> fallback seed 0
    cls2 = _class_with_leader(part15, 5)  # length 2 < m = 4
    g = [t16.zero] * 15
    g[5], g[10] = a, t16.frobenius(a, 1)  # normalize to alpha twice, not in GF(4)
    assert normalize_class(t16, g, cls2) == [a, a]
    seed, matches = best_seed(t16, g, cls2)
    assert seed == t16.zero and matches == 0


def test_encode_residual_examples(gf4):
    t = gf4
    part = enumerate_classes(3, 2)
    a = t.alpha
    consistent = [t.one, a, t.mul(a, a)]
    pkg = encode_residual(t, part, consistent)
    assert pkg.residual == ()
    assert decode_residual(t, pkg) == consistent

    g = [t.one, a, t.zero]
    pkg = encode_residual(t, part, g)
    assert len(pkg.residual) == 1
    assert decode_residual(t, pkg) == g

    g = [a, t.zero, t.zero]
    pkg = encode_residual(t, part, g)
    assert pkg.seeds.seeds[0] == t.zero  # alpha not in GF(2): fallback seed
    assert [(i, h.value) for i, h in pkg.residual] == [(0, a.value)]
    assert decode_residual(t, pkg) == g


@pytest.mark.parametrize("name", list(TOWER_CONFIGS))
def test_roundtrip_random(name):
    t = get_tower(name)
    rng = random.Random(31)
    for n in [d for d in range(1, t.Q) if (t.Q - 1) % d == 0]:
        part = enumerate_classes(n, t.q)
        for _ in range(60):
            g = [t.el(rng.randrange(t.Q)) for _ in range(n)]
            pkg = encode_residual(t, part, g)
            assert pkg.mode == "full"
            assert decode_residual(t, pkg) == g
            assert len(pkg.residual) == global_min_support(t, part, g)
            idxs = [i for i, _ in pkg.residual]
            assert idxs == sorted(idxs) and len(set(idxs)) == len(idxs)
            assert all(h.value != 0 for _, h in pkg.residual)


def test_truncated_mode(gf4):
    t = gf4
    part = enumerate_classes(3, 2)
    g = [t.alpha, t.one, t.alpha]  # forces a multi-entry residual
    full = encode_residual(t, part, g)
    if len(full.residual) < 2:
        pytest.skip("need at least 2 residual entries")
    pkg = encode_residual(t, part, g, budget=1)
    assert pkg.mode == "truncated"
    # largest indices dropped first; reconstruction differs exactly there
    dropped = [i for i, _ in full.residual[1:]]
    out = decode_residual(t, pkg)
    for i in range(3):
        assert (out[i] != g[i]) == (i in dropped)


def test_global_min_support_brute_force(gf4):
    # oracle: exhaustive nearest-codeword search over all 64 ambient vectors
    t = gf4
    part = enumerate_classes(3, 2)
    codewords = []
    for s0 in t.subfield_elements(1):
        for s1 in t.subfield_elements(2):
            osv = OrbitSeedVector(partition=part, seeds=(s0, s1))
            codewords.append(expand_seeds(t, osv))
    assert len(codewords) == 8
    for vals in itertools.product(range(4), repeat=3):
        g = [t.el(v) for v in vals]
        brute = min(
            sum(1 for x, y in zip(g, f) if x != y) for f in codewords
        )
        assert global_min_support(t, part, g) == brute


@pytest.mark.parametrize("name", list(TOWER_CONFIGS))
def test_best_seed_exhaustive(name):
    # classwise optimality against direct match counting over all q^ell seeds
    t = get_tower(name)
    rng = random.Random(37)
    for n in [d for d in range(1, t.Q) if (t.Q - 1) % d == 0]:
        part = enumerate_classes(n, t.q)
        for cls in part.classes:
            if t.q**cls.length > 256:
                continue
            for _ in range(10):
                g = [t.el(rng.randrange(t.Q)) for _ in range(n)]
                _, matches = best_seed(t, g, cls)
                best_direct = 0
                for b in t.subfield_elements(cls.length):
                    x = b
                    count = 0
                    for idx in cls.members:
                        if g[idx] == x:
                            count += 1
                        x = t.frobenius(x, 1)
                    best_direct = max(best_direct, count)
                assert matches == best_direct


@pytest.mark.parametrize("name", list(TOWER_CONFIGS))
def test_separability(name):
    # changing g outside a class never changes that class's best seed
    t = get_tower(name)
    rng = random.Random(41)
    n = t.Q - 1
    part = enumerate_classes(n, t.q)
    for _ in range(20):
        g = [t.el(rng.randrange(t.Q)) for _ in range(n)]
        for cls in part.classes:
            before = best_seed(t, g, cls)
            g2 = list(g)
            outside = [i for i in range(n) if i not in cls.members]
            for i in outside:
                g2[i] = t.el(rng.randrange(t.Q))
            assert best_seed(t, g2, cls) == before


def test_anchor_seed_examples(gf16):
    t = gf16
    part = enumerate_classes(15, 2)
    cls = _class_with_leader(part, 5)
    a = t.alpha
    g = [t.zero] * 15
    g[5], g[10] = t.pow(a, 5), t.pow(a, 10)
    assert anchor_seed(t, g, cls, 10) == (True, t.pow(a, 5), 0)
    g[5] = a  # normalized anchor alpha not in GF(4)
    adm, seed, cost = anchor_seed(t, g, cls, 5)
    assert not adm and seed is None and cost is None
    zero_g = [t.zero] * 15
    assert anchor_seed(t, zero_g, cls, 10) == (True, t.zero, 0)
    with pytest.raises(IndexNotInClass):
        anchor_seed(t, g, cls, 1)


def test_anchor_costs_fast_requires_normal_basis(gf9):
    part = enumerate_classes(8, 3)
    cls = part.classes[1]
    g = [gf9.zero] * 8
    if gf9.normal_basis is None:
        with pytest.raises(NormalBasisMissing):
            anchor_costs_fast(gf9, g, cls, [gf9.zero])
    gf9.find_normal_basis()
    assert anchor_costs_fast(gf9, g, cls, [gf9.zero]) == [0]


@pytest.mark.parametrize("name", list(TOWER_CONFIGS))
def test_anchor_costs_fast_matches_direct(name):
    t = get_tower(name)
    t.find_normal_basis()
    rng = random.Random(43)
    n = t.Q - 1
    part = enumerate_classes(n, t.q)
    for cls in part.classes:
        pool = t.subfield_elements(cls.length)
        for _ in range(10):
            g = [t.el(rng.randrange(t.Q)) for _ in range(n)]
            cands = [pool[rng.randrange(len(pool))] for _ in range(min(20, len(pool)))]
            fast = anchor_costs_fast(t, g, cls, cands)
            direct = []
            for b in cands:
                cost = 0
                x = b
                for idx in cls.members:
                    cost += t.weight_K(t.sub(g[idx], x), basis="normal")
                    x = t.frobenius(x, 1)
                direct.append(cost)
            assert fast == direct


def test_fast_cost_zero_for_true_seed(gf16):
    t = gf16
    t.find_normal_basis()
    part = enumerate_classes(15, 2)
    rng = random.Random(47)
    osv = random_orbit_seeds(t, part, rng)
    g = expand_seeds(t, osv)
    for cls, b in zip(part.classes, osv.seeds):
        assert anchor_costs_fast(t, g, cls, [b]) == [0]


def test_majority_recovery(gf16):
    t = gf16
    part = enumerate_classes(15, 2)
    rng = random.Random(53)
    for cls in [c for c in part.classes if c.length in (2, 4)]:
        pool = t.subfield_elements(cls.length)
        for _ in range(20):
            b0 = pool[rng.randrange(len(pool))]
            osv_seeds = []
            for c2 in part.classes:
                osv_seeds.append(b0 if c2 is cls else t.zero)
            g = expand_seeds(
                t, OrbitSeedVector(partition=part, seeds=tuple(osv_seeds))
            )
            # corrupt fewer than half the class coordinates
            max_err = (cls.length - 1) // 2
            for werr in range(max_err + 1):
                g2 = list(g)
                for idx in rng.sample(cls.members, werr):
                    g2[idx] = t.add(g2[idx], t.el(rng.randrange(1, t.Q)))
                seed, confident = recover_seed_majority(t, g2, cls)
                assert seed == b0 and confident


def test_majority_collision_not_confident(gf16):
    # 2 of 4 corrupted so that a second admissible value ties: no confidence
    t = gf16
    part = enumerate_classes(15, 2)
    cls = _class_with_leader(part, 1)  # length 4
    b0 = t.one
    bad = t.alpha  # admissible (length = m), planted twice
    g = [t.zero] * 15
    x = b0
    for idx in cls.members:
        g[idx] = x
        x = t.frobenius(x, 1)
    g[cls.members[0]] = bad
    g[cls.members[1]] = t.frobenius(bad, 1)
    seed, confident = recover_seed_majority(t, g, cls)
    assert not confident


def test_storage_cost():
    class Pkg:
        def __init__(self, n, s):
            self.n = n
            self.residual = tuple((i, None) for i in range(s))

    assert storage_cost(Pkg(15, 2), q=2, m=4) == 31
    assert storage_cost(Pkg(15, 0), q=2, m=4) == 15
    assert storage_cost(Pkg(3, 1), q=2, m=2) == 7
    assert ceil_log(2, 3) == 2 and ceil_log(2, 15) == 4
