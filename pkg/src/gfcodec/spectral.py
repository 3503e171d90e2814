"""DFT/IDFT over the extension field, the Frobenius-consistency test, and
the orbit-seed encoding of consistent spectra.

A spectrum of a base-field vector satisfies V[q*s mod n] = V[s]^q, so it is
pinned down by one native-subfield seed per q-cyclotomic class.  The codec
here stores exactly those seeds and reconstructs the rest by repeated
Frobenius application.
"""

import itertools
from dataclasses import dataclass

from .cyclotomic import CyclotomicPartition, enumerate_classes
from .errors import (
    LengthMismatch,
    NotConsistent,
    OrderNotDividing,
    SeedNotInSubfield,
    WrongOrder,
)


@dataclass(frozen=True)
class OrbitSeedVector:
    """One native-subfield seed per cyclotomic class."""

    partition: CyclotomicPartition
    seeds: tuple  # FieldElement per class, in class (leader) order

    def __post_init__(self):
        if len(self.seeds) != self.partition.kappa:
            raise LengthMismatch(
                f"{len(self.seeds)} seeds for {self.partition.kappa} classes"
            )


def _check_omega(tower, omega, n):
    if n < 1 or omega.value == 0 or tower.element_order(omega) != n:
        raise WrongOrder(f"omega does not have order {n}")


def dft(tower, v, omega):
    """V[s] = sum_i v[i] * omega^(i*s), exact."""
    n = len(v)
    _check_omega(tower, omega, n)
    pow_table = [tower.pow(omega, k) for k in range(n)]
    out = []
    for s in range(n):
        acc = tower.zero
        for i in range(n):
            if v[i].value:
                acc = tower.add(acc, tower.mul(v[i], pow_table[(i * s) % n]))
        out.append(acc)
    return out


def idft(tower, V, omega):
    """v[j] = (1/n) * sum_s V[s] * omega^(-j*s); exact inverse of dft."""
    n = len(V)
    _check_omega(tower, omega, n)
    inv_n = tower.inv(tower.scalar(n))
    inv_omega = tower.inv(omega)
    pow_table = [tower.pow(inv_omega, k) for k in range(n)]
    out = []
    for j in range(n):
        acc = tower.zero
        for s in range(n):
            if V[s].value:
                acc = tower.add(acc, tower.mul(V[s], pow_table[(j * s) % n]))
        out.append(tower.mul(inv_n, acc))
    return out


def is_frobenius_consistent(tower, V):
    """(True, None) if V[q*s mod n] = V[s]^q everywhere, else (False, s)."""
    n = len(V)
    q = tower.q
    for s in range(n):
        if V[(q * s) % n] != tower.pow(V[s], q):
            return False, s
    return True, None


def encode_seeds(tower, V, partition=None):
    """Store one leader value per class of a consistent spectrum."""
    n = len(V)
    if partition is None:
        partition = enumerate_classes(n, tower.q)
    ok, bad = is_frobenius_consistent(tower, V)
    if not ok:
        raise NotConsistent(f"Frobenius relation violated at index {bad}")
    seeds = []
    for cls in partition.classes:
        b = V[cls.leader]
        if not tower.subfield_test(b, cls.length):
            # unreachable for a consistent spectrum
            raise SeedNotInSubfield(
                f"leader value at {cls.leader} not in GF(q^{cls.length})"
            )
        seeds.append(b)
    return OrbitSeedVector(partition=partition, seeds=tuple(seeds))


def expand_seeds(tower, osv):
    """Fill a length-n vector from class seeds via v[q^t*c] = b^(q^t).

    This is simultaneously the spectral decode and the time-domain expansion
    of a class-consistent vector.
    """
    partition = osv.partition
    out = [tower.zero] * partition.n
    for cls, b in zip(partition.classes, osv.seeds):
        if not tower.subfield_test(b, cls.length):
            raise SeedNotInSubfield(
                f"seed {b.value} for class {cls.leader} not in GF(q^{cls.length})"
            )
        x = b
        for idx in cls.members:
            out[idx] = x
            x = tower.frobenius(x, 1)
    return out


def decode_seeds(tower, osv):
    """Reconstruct the full consistent spectrum from its orbit seeds."""
    return expand_seeds(tower, osv)


def random_orbit_seeds(tower, partition, rng):
    """Uniform random consistent data: one uniform seed per class."""
    seeds = []
    for cls in partition.classes:
        pool = tower.subfield_elements(cls.length)
        seeds.append(pool[rng.randrange(len(pool))])
    return OrbitSeedVector(partition=partition, seeds=tuple(seeds))


def descent_check_product(tower, dims, v):
    """Frobenius-descent check on a product of cyclic groups.

    Computes the multi-dimensional DFT of `v` (a nested list of shape `dims`)
    and returns True iff V(chi^q) = V(chi)^q holds at every multi-index.
    """
    if len(dims) > 3:
        raise LengthMismatch("at most 3 axes supported")
    omegas = []
    for d in dims:
        if d < 1 or (tower.Q - 1) % d != 0:
            raise OrderNotDividing(f"dim {d} does not divide Q-1")
        omegas.append(tower.element_of_order(d))

    def get(arr, idx):
        for i in idx:
            arr = arr[i]
        return arr

    grid = list(itertools.product(*[range(d) for d in dims]))
    spectrum = {}
    for s in grid:
        acc = tower.zero
        for x in grid:
            val = get(v, x)
            if val.value == 0:
                continue
            w = val
            for axis in range(len(dims)):
                w = tower.mul(w, tower.pow(omegas[axis], x[axis] * s[axis]))
            acc = tower.add(acc, w)
        spectrum[s] = acc
    q = tower.q
    for s in grid:
        qs = tuple((q * si) % di for si, di in zip(s, dims))
        if spectrum[qs] != tower.pow(spectrum[s], q):
            return False
    return True


def class_min_poly(tower, members, omega):
    """prod_{s in C} (X - omega^s), returned as K canonical integers.

    For a full cyclotomic class this is an irreducible factor of X^n - 1
    over K, so every coefficient lies in the base field.
    """
    if omega.value == 0:
        raise WrongOrder("omega must be a root of unity")
    poly = [tower.one]
    for s in members:
        root = tower.pow(omega, s)
        nxt = [tower.zero] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = tower.add(nxt[i + 1], c)
            nxt[i] = tower.sub(nxt[i], tower.mul(c, root))
        poly = nxt
    return [tower.as_base(c) for c in poly]
