"""Exact arithmetic in a two-level tower GF(p) < GF(q) < GF(q^m).

The base field K = GF(q), q = p^a, is realized as GF(p)[x]/(k_modulus) and
its elements are carried around as canonical integers in [0, q): the base-p
digits of the integer are the GF(p) coefficients, low degree first.  The top
field L = GF(q^m) is K[y]/(l_modulus); an element of L is encoded as the
canonical integer sum(int(c_i) * q^i) over its K-coordinates c_i.

Towers are immutable after construction and all operations are pure reads
of the precomputed tables, so they are safe to share between threads.
"""

from dataclasses import dataclass
from math import gcd

from . import polyring
from .errors import (
    DivisionByZero,
    InvalidSubfieldDegree,
    NoDlogTable,
    NormalBasisMissing,
    NotInSubfield,
    NotPrime,
    OrderNotDividing,
    ReducibleModulus,
    SearchExhausted,
)

DLOG_TABLE_CAP = 2**20
K_TABLE_CAP = 512


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldElement:
    """One element of the top field L, keyed by its canonical integer."""

    __slots__ = ("tower", "value")

    def __init__(self, tower, value):
        self.tower = tower
        self.value = value

    @property
    def coords(self):
        """K-coordinates in the polynomial basis, low degree first."""
        return self.tower.int_to_coords(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.tower is other.tower
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __add__(self, other):
        return self.tower.add(self, other)

    def __sub__(self, other):
        return self.tower.sub(self, other)

    def __neg__(self):
        return self.tower.sub(self.tower.zero, self)

    def __mul__(self, other):
        return self.tower.mul(self, other)

    def __pow__(self, e):
        return self.tower.pow(self, e)

    def __repr__(self):
        return f"FieldElement({self.value})"


@dataclass
class NormalBasis:
    """Change of basis between polynomial and normal coordinates."""

    beta: "FieldElement"
    # columns of `matrix` are the polynomial-basis coordinate vectors of
    # beta^(q^t), t = 0..m-1; `inverse` undoes it.
    matrix: list
    inverse: list


class FieldTower:
    """Parameters and tables for GF(p) < GF(q) < GF(q^m)."""

    def __init__(self, p, k_modulus, l_modulus):
        if not _is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        self.p = p
        self.k_modulus = self._normalize_k_modulus(p, k_modulus)
        self.a = len(self.k_modulus) - 1
        self.q = p**self.a

        gfp = polyring.FieldOps(
            zero=0,
            one=1,
            add=lambda x, y: (x + y) % p,
            sub=lambda x, y: (x - y) % p,
            mul=lambda x, y: (x * y) % p,
            inv=lambda x: pow(x, p - 2, p),
        )
        self._gfp_ops = gfp
        if not polyring.is_irreducible(self.k_modulus, p, gfp):
            raise ReducibleModulus("k_modulus is reducible over GF(p)")

        self._build_k_tables()

        self.l_modulus = [c % self.q for c in l_modulus]
        if len(self.l_modulus) < 2 or self.l_modulus[-1] != 1:
            raise ReducibleModulus("l_modulus must be monic of degree >= 1")
        self.m = len(self.l_modulus) - 1
        if not polyring.is_irreducible(self.l_modulus, self.q, self._k_ops):
            raise ReducibleModulus("l_modulus is reducible over K")

        self.Q = self.q**self.m
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self.normal_basis = None

        self._exp_table = None
        self._log_table = None
        self.alpha = self._find_primitive()
        if self.Q <= DLOG_TABLE_CAP:
            self._build_dlog_tables()

    # ---------------------------------------------------------------- K level

    @staticmethod
    def _normalize_k_modulus(p, k_modulus):
        k = [c % p for c in k_modulus]
        if k == [1]:
            # degenerate spelling for K = GF(p): use the modulus x itself
            return [0, 1]
        if len(k) < 2 or k[-1] != 1:
            raise ReducibleModulus("k_modulus must be monic of degree >= 1 (or [1])")
        return k

    def k_digits(self, u):
        p = self.p
        return [(u // p**i) % p for i in range(self.a)]

    def _k_from_digits(self, digits):
        u = 0
        for d in reversed(digits):
            u = u * self.p + d
        return u

    def k_add(self, u, v):
        if self.p == 2:
            return u ^ v
        du, dv = self.k_digits(u), self.k_digits(v)
        return self._k_from_digits([(x + y) % self.p for x, y in zip(du, dv)])

    def k_sub(self, u, v):
        if self.p == 2:
            return u ^ v
        du, dv = self.k_digits(u), self.k_digits(v)
        return self._k_from_digits([(x - y) % self.p for x, y in zip(du, dv)])

    def k_mul(self, u, v):
        if self._k_mul_table is not None:
            return self._k_mul_table[u][v]
        return self._k_mul_raw(u, v)

    def _k_mul_raw(self, u, v):
        ops = self._gfp_ops
        prod = polyring.pmod(
            polyring.pmul(self.k_digits(u), self.k_digits(v), ops),
            self.k_modulus,
            ops,
        )
        prod += [0] * (self.a - len(prod))
        return self._k_from_digits(prod)

    def k_inv(self, u):
        if u == 0:
            raise DivisionByZero("inverse of zero in K")
        if self._k_inv_table is not None:
            return self._k_inv_table[u]
        r = u
        for _ in range(self.q - 3):
            r = self._k_mul_raw(r, u)
        return r

    def _build_k_tables(self):
        self._k_mul_table = None
        self._k_inv_table = None
        if self.q <= K_TABLE_CAP:
            q = self.q
            self._k_mul_table = [
                [self._k_mul_raw(u, v) for v in range(q)] for u in range(q)
            ]
            inv = [0] * q
            for u in range(1, q):
                for v in range(1, q):
                    if self._k_mul_table[u][v] == 1:
                        inv[u] = v
                        break
            self._k_inv_table = inv
        self._k_ops = polyring.FieldOps(
            zero=0,
            one=1,
            add=self.k_add,
            sub=self.k_sub,
            mul=self.k_mul,
            inv=self.k_inv,
        )

    # ---------------------------------------------------------------- L level

    def int_to_coords(self, value):
        q = self.q
        return tuple((value // q**i) % q for i in range(self.m))

    def coords_to_int(self, coords):
        v = 0
        for c in reversed(list(coords)):
            v = v * self.q + c
        return v

    def el(self, value):
        """Element from its canonical integer."""
        if not 0 <= value < self.Q:
            raise ValueError(f"canonical integer {value} out of [0, {self.Q})")
        return FieldElement(self, value)

    def from_base(self, u):
        """Embed a K canonical integer into L."""
        return FieldElement(self, u % self.q)

    def scalar(self, n):
        """The prime-field scalar n (i.e. n copies of 1)."""
        return self.from_base(self._k_from_digits([n % self.p] + [0] * (self.a - 1)))

    def as_base(self, x):
        """K canonical integer of an element of K; raises if x is not in K."""
        coords = self.int_to_coords(x.value)
        if any(c for c in coords[1:]):
            raise NotInSubfield("element does not lie in the base field")
        return coords[0]

    def add(self, x, y):
        if self.p == 2:
            return FieldElement(self, x.value ^ y.value)
        cx, cy = self.int_to_coords(x.value), self.int_to_coords(y.value)
        return FieldElement(
            self, self.coords_to_int(self.k_add(a, b) for a, b in zip(cx, cy))
        )

    def sub(self, x, y):
        if self.p == 2:
            return FieldElement(self, x.value ^ y.value)
        cx, cy = self.int_to_coords(x.value), self.int_to_coords(y.value)
        return FieldElement(
            self, self.coords_to_int(self.k_sub(a, b) for a, b in zip(cx, cy))
        )

    def mul(self, x, y):
        if x.value == 0 or y.value == 0:
            return self.zero
        if self._log_table is not None:
            e = (self._log_table[x.value] + self._log_table[y.value]) % (self.Q - 1)
            return FieldElement(self, self._exp_table[e])
        return FieldElement(self, self._mul_raw(x.value, y.value))

    def _mul_raw(self, xv, yv):
        ops = self._k_ops
        prod = polyring.pmod(
            polyring.pmul(
                list(self.int_to_coords(xv)), list(self.int_to_coords(yv)), ops
            ),
            self.l_modulus,
            ops,
        )
        prod += [0] * (self.m - len(prod))
        return self.coords_to_int(prod)

    def inv(self, x):
        if x.value == 0:
            raise DivisionByZero("inverse of zero")
        if self._log_table is not None:
            e = (-self._log_table[x.value]) % (self.Q - 1)
            return FieldElement(self, self._exp_table[e])
        return self.pow(x, self.Q - 2)

    def pow(self, x, e):
        if x.value == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return self.one if e == 0 else self.zero
        e %= self.Q - 1
        if self._log_table is not None:
            r = (self._log_table[x.value] * e) % (self.Q - 1)
            return FieldElement(self, self._exp_table[r])
        result, base = self.one, x
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # ------------------------------------------------------ primitive element

    def _element_order_raw(self, x):
        if x.value == 0:
            return None
        order = self.Q - 1
        for r in _prime_factors(self.Q - 1):
            while order % r == 0 and self.pow(x, order // r).value == 1:
                order //= r
        return order

    def _find_primitive(self):
        # smallest canonical integer with full multiplicative order, so that
        # alpha is identical across runs
        for v in range(1, self.Q):
            x = FieldElement(self, v)
            if self._element_order_raw(x) == self.Q - 1:
                return x
        raise SearchExhausted("no primitive element found")  # pragma: no cover

    def _build_dlog_tables(self):
        exp = [1] * (self.Q - 1)
        cur = 1
        for i in range(1, self.Q - 1):
            cur = self._mul_raw(cur, self.alpha.value)
            exp[i] = cur
        log = [None] * self.Q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp_table = exp
        self._log_table = log

    @property
    def has_dlog(self):
        return self._log_table is not None

    def dlog(self, x):
        """Discrete logarithm to base alpha."""
        if x.value == 0:
            raise DivisionByZero("discrete log of zero")
        if self._log_table is None:
            raise NoDlogTable(f"no dlog table for Q={self.Q}")
        return self._log_table[x.value]

    def element_order(self, x):
        if x.value == 0:
            raise DivisionByZero("order of zero")
        if self._log_table is not None:
            e = self._log_table[x.value]
            n = self.Q - 1
            return n // gcd(n, e)
        return self._element_order_raw(x)

    # ---------------------------------------------------- Galois structure

    def frobenius(self, x, t=1):
        """x^(q^(t mod m))."""
        t %= self.m
        return self.pow(x, self.q**t)

    def inverse_frobenius(self, x, t=1):
        """x^(q^(m - t mod m)); inverts frobenius(., t)."""
        t %= self.m
        return self.pow(x, self.q ** ((self.m - t) % self.m))

    def subfield_test(self, x, ell):
        """True iff x lies in GF(q^ell), for ell | m.

        Checked via the powering criterion and, when dlog tables exist, via
        exponent divisibility; the two criteria always agree.
        """
        if ell <= 0 or self.m % ell != 0:
            raise InvalidSubfieldDegree(f"ell={ell} does not divide m={self.m}")
        by_power = self.pow(x, self.q**ell) == x
        if self._log_table is not None and x.value != 0:
            step = (self.Q - 1) // (self.q**ell - 1)
            by_dlog = self._log_table[x.value] % step == 0
            assert by_power == by_dlog
        return by_power

    def rel_trace(self, x, ell):
        """Trace from GF(q^ell) down to K; requires x in GF(q^ell)."""
        if not self.subfield_test(x, ell):
            raise NotInSubfield(f"element {x.value} not in GF(q^{ell})")
        acc = self.zero
        y = x
        for _ in range(ell):
            acc = self.add(acc, y)
            y = self.frobenius(y, 1)
        return acc

    def element_of_order(self, n):
        """alpha^((Q-1)/n); has multiplicative order exactly n."""
        if n <= 0 or (self.Q - 1) % n != 0:
            raise OrderNotDividing(f"n={n} does not divide Q-1={self.Q - 1}")
        return self.pow(self.alpha, (self.Q - 1) // n)

    def subfield_elements(self, ell):
        """All elements of GF(q^ell), sorted by canonical integer."""
        if ell <= 0 or self.m % ell != 0:
            raise InvalidSubfieldDegree(f"ell={ell} does not divide m={self.m}")
        if self._log_table is not None:
            step = (self.Q - 1) // (self.q**ell - 1)
            vals = [0] + [self._exp_table[step * j] for j in range(self.q**ell - 1)]
            return [FieldElement(self, v) for v in sorted(vals)]
        out = []
        for v in range(self.Q):
            x = FieldElement(self, v)
            if self.pow(x, self.q**ell) == x:
                out.append(x)
        return out

    # ----------------------------------------------------------- weights

    def weight_K(self, x, basis="poly"):
        """Number of nonzero K-coordinates of x in the chosen basis."""
        if basis == "poly":
            coords = self.int_to_coords(x.value)
        elif basis == "normal":
            coords = self.to_normal(x)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return sum(1 for c in coords if c != 0)

    # ------------------------------------------------------- normal basis

    def find_normal_basis(self):
        """Install (and return) the first normal basis in canonical scan order.

        After installation, converting to normal coordinates, cyclically
        shifting, and converting back equals frobenius(., 1).
        """
        if self.normal_basis is not None:
            return self.normal_basis
        for v in range(1, self.Q):
            beta = FieldElement(self, v)
            cols = []
            b = beta
            for _ in range(self.m):
                cols.append(list(self.int_to_coords(b.value)))
                b = self.frobenius(b, 1)
            matrix = [[cols[j][i] for j in range(self.m)] for i in range(self.m)]
            inverse = self._k_matrix_inverse(matrix)
            if inverse is not None:
                self.normal_basis = NormalBasis(beta=beta, matrix=matrix, inverse=inverse)
                return self.normal_basis
        raise SearchExhausted("no normal basis found")  # pragma: no cover

    def _k_matrix_inverse(self, matrix):
        """Inverse of an m x m matrix over K, or None if singular."""
        m = len(matrix)
        aug = [list(row) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(matrix)]
        for col in range(m):
            pivot = next((r for r in range(col, m) if aug[r][col] != 0), None)
            if pivot is None:
                return None
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pinv = self.k_inv(aug[col][col])
            aug[col] = [self.k_mul(pinv, v) for v in aug[col]]
            for r in range(m):
                if r != col and aug[r][col] != 0:
                    factor = aug[r][col]
                    aug[r] = [
                        self.k_sub(a, self.k_mul(factor, b))
                        for a, b in zip(aug[r], aug[col])
                    ]
        return [row[m:] for row in aug]

    def to_normal(self, x):
        """Normal-basis coordinates of x (tuple of K canonical integers)."""
        if self.normal_basis is None:
            raise NormalBasisMissing("call find_normal_basis() first")
        coords = self.int_to_coords(x.value)
        inv = self.normal_basis.inverse
        out = []
        for row in inv:
            acc = 0
            for a, c in zip(row, coords):
                acc = self.k_add(acc, self.k_mul(a, c))
            out.append(acc)
        return tuple(out)

    def from_normal(self, ncoords):
        if self.normal_basis is None:
            raise NormalBasisMissing("call find_normal_basis() first")
        mat = self.normal_basis.matrix
        out = []
        for row in mat:
            acc = 0
            for a, c in zip(row, ncoords):
                acc = self.k_add(acc, self.k_mul(a, c))
            out.append(acc)
        return FieldElement(self, self.coords_to_int(out))


def build_tower(p, k_modulus, l_modulus):
    """Construct a verified field tower GF(p) < GF(q) < GF(q^m)."""
    return FieldTower(p, k_modulus, l_modulus)
