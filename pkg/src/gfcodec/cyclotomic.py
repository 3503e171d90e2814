"""q-cyclotomic classes modulo n and the associated counting formulas."""

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime, Overflow

ENUMERATION_CAP = 2**20


@dataclass(frozen=True)
class CyclotomicClass:
    leader: int
    length: int
    members: tuple  # (leader, q*leader, q^2*leader, ...) mod n


@dataclass(frozen=True)
class CyclotomicPartition:
    n: int
    q: int
    classes: tuple  # CyclotomicClass, ordered by leader
    index_map: dict  # i -> (class index, step t) with i = q^t * leader mod n

    @property
    def kappa(self):
        return len(self.classes)

    @property
    def lengths(self):
        return [c.length for c in self.classes]


def enumerate_classes(n, q):
    """Partition Z/nZ into q-cyclotomic classes, leaders minimal."""
    _check_coprime(n, q)
    if n > ENUMERATION_CAP:
        raise Overflow(f"n={n} exceeds enumeration cap {ENUMERATION_CAP}")
    seen = [False] * n
    classes = []
    index_map = {}
    for s in range(n):
        if seen[s]:
            continue
        members = []
        i = s
        while not seen[i]:
            seen[i] = True
            index_map[i] = (len(classes), len(members))
            members.append(i)
            i = (i * q) % n
        # ascending scan means s is the minimum of its orbit
        classes.append(CyclotomicClass(leader=s, length=len(members), members=tuple(members)))
    return CyclotomicPartition(n=n, q=q, classes=tuple(classes), index_map=index_map)


def multiplicative_order(q, n):
    """ord_n(q); n = 1 gives 1."""
    _check_coprime(n, q)
    if n == 1:
        return 1
    d, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        d += 1
    return d


def kappa_burnside(n, q):
    """Number of classes via the orbit-counting average of gcd(n, q^t - 1)."""
    d = multiplicative_order(q, n)
    total = sum(gcd(n, q**t - 1) for t in range(d))
    assert total % d == 0
    return total // d


def _mobius(n):
    mu, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def exact_length_counts(n, q):
    """For each e | ord_n(q): (A_e, B_e) = (#indices, #classes) of exact length e."""
    d = multiplicative_order(q, n)
    out = {}
    for e in _divisors(d):
        a_e = sum(_mobius(e // r) * gcd(n, q**r - 1) for r in _divisors(e))
        assert a_e % e == 0
        out[e] = (a_e, a_e // e)
    assert sum(a for a, _ in out.values()) == n
    return out


def full_length_counts(q, m):
    """Class-length counts for the full modulus n = q^m - 1.

    Returns (mapping e -> B_e for e | m, kappa); cross-checked against the
    orbit-counting formula.
    """
    n = q**m - 1
    if n.bit_length() > 63:
        raise Overflow(f"q^m - 1 = {n} exceeds native integer range")
    counts = {}
    for e in _divisors(m):
        b_e = sum(_mobius(e // r) * (q**r - 1) for r in _divisors(e))
        assert b_e % e == 0
        counts[e] = b_e // e
    kappa = sum(counts.values())
    if n <= ENUMERATION_CAP:
        assert kappa == kappa_burnside(n, q)
    return counts, kappa


def compression_report(q, m):
    """(n, kappa, n / kappa) for n = q^m - 1."""
    _, kappa = full_length_counts(q, m)
    n = q**m - 1
    if n == 0:
        return (0, 0, 1.0)
    return (n, kappa, n / kappa)


def _check_coprime(n, q):
    if n < 1:
        raise NotCoprime(f"n must be >= 1, got {n}")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
