"""Class-consistent + residual representation of arbitrary vectors.

Any g in L^n splits as g = f + h with f class-consistent and h a residual.
Choosing f to minimize the residual's symbol support is a nearest-codeword
problem that separates over cyclotomic classes: on each class the optimal
seed is the most frequent admissible normalized value.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import IndexNotInClass, IndexOutOfRange, NormalBasisMissing
from .spectral import OrbitSeedVector, expand_seeds


@dataclass(frozen=True)
class ResidualPackage:
    seeds: OrbitSeedVector
    residual: tuple  # ((index, FieldElement), ...) strictly increasing indices
    mode: str  # "full" | "truncated"
    n: int


def normalize_class(tower, g, cls):
    """x_t = (g[q^t * c])^(q^(m-t)): seed candidates in a common frame."""
    return [
        tower.inverse_frobenius(g[idx], t) for t, idx in enumerate(cls.members)
    ]


def best_seed(tower, g, cls):
    """Support-minimizing seed on one class: (seed, match count).

    Among normalized values lying in the native subfield, the most frequent
    one wins; ties break to the smallest canonical integer; if none is
    admissible the seed falls back to 0 with zero matches.
    """
    ell = cls.length
    counts = Counter()
    for x in normalize_class(tower, g, cls):
        if tower.subfield_test(x, ell):
            counts[x.value] += 1
    if not counts:
        return tower.zero, 0
    best_count = max(counts.values())
    value = min(v for v, c in counts.items() if c == best_count)
    return tower.el(value), best_count


def encode_residual(tower, partition, g, budget=None):
    """Algorithmic split g = f + h with per-class optimal seeds.

    With `budget` set, residual entries of largest index are dropped first
    and the package is marked truncated.
    """
    seeds = tuple(best_seed(tower, g, cls)[0] for cls in partition.classes)
    osv = OrbitSeedVector(partition=partition, seeds=seeds)
    f = expand_seeds(tower, osv)
    residual = [
        (i, tower.sub(g[i], f[i])) for i in range(partition.n) if g[i] != f[i]
    ]
    mode = "full"
    if budget is not None and len(residual) > budget:
        residual = residual[:budget]
        mode = "truncated"
    return ResidualPackage(seeds=osv, residual=tuple(residual), mode=mode, n=partition.n)


def decode_residual(tower, pkg):
    """expand(seeds) + scatter(residual); exact when mode is 'full'."""
    out = expand_seeds(tower, pkg.seeds)
    for i, h in pkg.residual:
        if not 0 <= i < pkg.n:
            raise IndexOutOfRange(f"residual index {i} outside [0, {pkg.n})")
        out[i] = tower.add(out[i], h)
    return out


def global_min_support(tower, partition, g):
    """Minimum symbol support of g - f over all class-consistent f."""
    return sum(
        cls.length - best_seed(tower, g, cls)[1] for cls in partition.classes
    )


def anchor_seed(tower, g, cls, j, basis="poly"):
    """Seed forced to agree with g at coordinate j of the class.

    Returns (admissible, seed, cost); cost is the summed wt_K of the class
    residual and is only defined for admissible anchors.
    """
    if j not in cls.members:
        raise IndexNotInClass(f"index {j} not in class of {cls.leader}")
    u = cls.members.index(j)
    b = tower.inverse_frobenius(g[j], u)
    if not tower.subfield_test(b, cls.length):
        return False, None, None
    cost = 0
    x = b
    for idx in cls.members:
        cost += tower.weight_K(tower.sub(g[idx], x), basis=basis)
        x = tower.frobenius(x, 1)
    return True, b, cost


def anchor_costs_fast(tower, g, cls, candidates):
    """wt_K residual costs for many candidate seeds via coordinate counts.

    Requires a normal basis, in which Frobenius is a cyclic shift and
    preserves wt_K; the cost of candidate b then reads off per-coordinate
    frequency counts of the normalized values in O(m) per candidate.
    """
    if tower.normal_basis is None:
        raise NormalBasisMissing("anchor_costs_fast needs a normal basis")
    ell = cls.length
    xs = normalize_class(tower, g, cls)
    ncoords = [tower.to_normal(x) for x in xs]
    m = tower.m
    counts = [Counter() for _ in range(m)]
    for nc in ncoords:
        for r in range(m):
            counts[r][nc[r]] += 1
    costs = []
    for b in candidates:
        bn = tower.to_normal(b)
        costs.append(sum(ell - counts[r][bn[r]] for r in range(m)))
    return costs


def recover_seed_majority(tower, g, cls):
    """(seed, confident): confident iff matches exceed half the class length,
    in which case the maximizer is unique and equals the true seed whenever
    fewer than half the class coordinates were corrupted."""
    b, count = best_seed(tower, g, cls)
    confident = 2 * count > cls.length
    return b, confident


def ceil_log(base, n):
    """Smallest k with base^k >= n."""
    k, v = 0, 1
    while v < n:
        v *= base
        k += 1
    return k


def storage_cost(pkg, q, m):
    """Base-field symbol count n + s*(ceil(log_q n) + m)."""
    s = len(pkg.residual)
    return pkg.n + s * (ceil_log(q, pkg.n) + m)
