"""Coding-theoretic analysis of the class-consistent code: weight
enumerator, covering radii, tail bounds, and counting/entropy lower bounds.

All combinatorial quantities are exact (Python big integers, Fractions);
floats appear only in the entropy evaluator, which is advisory.
"""

import itertools
import math
import random
from fractions import Fraction

from .errors import InvalidSubfieldDegree, TooLarge
from .spectral import OrbitSeedVector, expand_seeds

ENUMERATION_CAP = 2**16


def weight_enumerator(partition, q):
    """Coefficients of prod_j (1 + (q^ell_j - 1) z^ell_j); coeffs[w] counts
    codewords of symbol weight w."""
    coeffs = [1]
    for ell in partition.lengths:
        nxt = [0] * (len(coeffs) + ell)
        mult = q**ell - 1
        for w, c in enumerate(coeffs):
            nxt[w] += c
            nxt[w + ell] += c * mult
        coeffs = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def enumerate_code(tower, partition):
    """Yield every class-consistent codeword exactly once (q^n of them)."""
    total = tower.q**partition.n
    if total > ENUMERATION_CAP:
        raise TooLarge(f"code has {total} words, cap is {ENUMERATION_CAP}")
    pools = [tower.subfield_elements(c.length) for c in partition.classes]
    for combo in itertools.product(*pools):
        osv = OrbitSeedVector(partition=partition, seeds=tuple(combo))
        yield expand_seeds(tower, osv)


def symbol_weight(v):
    return sum(1 for x in v if x.value != 0)


def class_covering_radius(ell, m):
    """Covering radius of a single class code: ell if ell < m, else ell - 1."""
    if ell <= 0 or m % ell != 0:
        raise InvalidSubfieldDegree(f"ell={ell} does not divide m={m}")
    if ell < m:
        return ell
    return ell - 1


def global_covering_radius(partition, m):
    """n minus the number of classes of full length m (n if there are none)."""
    return partition.n - sum(1 for c in partition.classes if c.length == m)


def tail_bound(ell, m, q, r):
    """Union bound Pr(M_C >= r) <= q^ell * C(ell, r) * q^(-m*r).

    Returns (exact Fraction, value clamped to 1).
    """
    bound = Fraction(q**ell * math.comb(ell, r), q ** (m * r))
    return bound, min(bound, Fraction(1))


def universal_bound_check(n, q, m, s):
    """Counting requirement for universal residual radius s:
    q^n * sum_{j<=s} C(n,j)(Q-1)^j >= Q^n.  holds=False certifies
    impossibility."""
    Q = q**m
    lhs = q**n * sum(math.comb(n, j) * (Q - 1) ** j for j in range(s + 1))
    rhs = Q**n
    return lhs, rhs, lhs >= rhs


def entropy_bound_check(delta, q, m, n=None):
    """Finite form of the entropy lower bound (advisory, float, tol 1e-9).

    lhs = 1 + h2(delta)/log2(q) + delta*log_q(Q-1), compared against m.
    """
    delta = float(delta)
    if not 0 <= delta <= 0.5:
        raise ValueError("delta must lie in [0, 1/2]")
    if delta in (0.0, 1.0):
        h2 = 0.0
    else:
        h2 = -delta * math.log2(delta) - (1 - delta) * math.log2(1 - delta)
    Q = q**m
    log_q_terms = delta * math.log(Q - 1, q) if delta > 0 else 0.0
    lhs = 1 + h2 / math.log2(q) + log_q_terms
    rhs = float(m)
    return lhs, rhs, lhs >= rhs - 1e-9


def residual_count(n, Q, s):
    """Number of residuals of support exactly s, and the enumerative bit cost."""
    count = math.comb(n, s) * (Q - 1) ** s
    bits = math.ceil(math.log2(count)) if count > 1 else 0
    return count, bits


def tail_bound_montecarlo(tower, ell, trials, seed):
    """Empirical distribution of the best admissible match count M_C.

    Draws `trials` classes of ell values uniform in L and returns
    {r: empirical Pr(M_C >= r)} for r = 1..ell.  Deterministic for a fixed
    seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if ell <= 0 or tower.m % ell != 0:
        raise InvalidSubfieldDegree(f"ell={ell} does not divide m={tower.m}")
    rng = random.Random(seed)
    Q = tower.Q
    hist = [0] * (ell + 1)  # hist[v] = #trials with M_C == v
    for _ in range(trials):
        counts = {}
        for _ in range(ell):
            x = tower.el(rng.randrange(Q))
            if tower.subfield_test(x, ell):
                counts[x.value] = counts.get(x.value, 0) + 1
        hist[max(counts.values()) if counts else 0] += 1
    out = {}
    for r in range(1, ell + 1):
        out[r] = sum(hist[r:]) / trials
    return out
