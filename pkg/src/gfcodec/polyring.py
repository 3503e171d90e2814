"""Dense polynomial helpers over an arbitrary field.

Polynomials are lists of coefficients, low degree first.  The coefficient
field is supplied as a small ops object so the same routines serve GF(p)
digits, base-field integers, and extension-field elements alike.
"""


class FieldOps:
    """Bundle of coefficient-field operations used by the polynomial code."""

    def __init__(self, zero, one, add, sub, mul, inv):
        self.zero = zero
        self.one = one
        self.add = add
        self.sub = sub
        self.mul = mul
        self.inv = inv


def trim(p, ops):
    while p and p[-1] == ops.zero:
        p.pop()
    return p


def degree(p, ops):
    return len(trim(list(p), ops)) - 1


def padd(f, g, ops):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ops.zero
        b = g[i] if i < len(g) else ops.zero
        out.append(ops.add(a, b))
    return trim(out, ops)


def psub(f, g, ops):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ops.zero
        b = g[i] if i < len(g) else ops.zero
        out.append(ops.sub(a, b))
    return trim(out, ops)


def pmul(f, g, ops):
    if not f or not g:
        return []
    out = [ops.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == ops.zero:
            continue
        for j, b in enumerate(g):
            if b == ops.zero:
                continue
            out[i + j] = ops.add(out[i + j], ops.mul(a, b))
    return trim(out, ops)


def pmod(f, g, ops):
    """Remainder of f modulo g; g must be nonzero."""
    f = trim(list(f), ops)
    g = trim(list(g), ops)
    if not g:
        raise ZeroDivisionError("polynomial modulus is zero")
    lead_inv = ops.inv(g[-1])
    while len(f) >= len(g):
        shift = len(f) - len(g)
        factor = ops.mul(f[-1], lead_inv)
        for i in range(len(g)):
            f[shift + i] = ops.sub(f[shift + i], ops.mul(factor, g[i]))
        trim(f, ops)
    return f


def pgcd(f, g, ops):
    """Monic gcd of f and g."""
    f = trim(list(f), ops)
    g = trim(list(g), ops)
    while g:
        f, g = g, pmod(f, g, ops)
    if f:
        c = ops.inv(f[-1])
        f = [ops.mul(a, c) for a in f]
    return f


def ppow_mod(base, e, modulus, ops):
    """base^e reduced modulo `modulus`."""
    result = [ops.one]
    base = pmod(base, modulus, ops)
    while e > 0:
        if e & 1:
            result = pmod(pmul(result, base, ops), modulus, ops)
        base = pmod(pmul(base, base, ops), modulus, ops)
        e >>= 1
    return result


def peval(f, x, ops):
    acc = ops.zero
    for c in reversed(f):
        acc = ops.add(ops.mul(acc, x), c)
    return acc


def is_irreducible(f, field_size, ops):
    """Irreducibility test for a monic polynomial over a field of `field_size`
    elements.

    Degrees 2 and 3 reduce to a root search over the field when the field is
    small enough to scan; otherwise (and for higher degrees) the standard
    gcd(X^(s^i) - X, f) criterion is used.
    """
    f = trim(list(f), ops)
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if d <= 3 and field_size <= 4096:
        for x in _field_elements(field_size, ops):
            if peval(f, x, ops) == ops.zero:
                return False
        if d <= 3:
            return True
    # x^(s^d) == x mod f, and no smaller prime-quotient power fixes x
    x_poly = [ops.zero, ops.one]
    xp = ppow_mod(x_poly, field_size**d, f, ops)
    if trim(psub(xp, x_poly, ops), ops):
        return False
    for r in _prime_factors(d):
        xp = ppow_mod(x_poly, field_size ** (d // r), f, ops)
        g = pgcd(psub(xp, x_poly, ops), f, ops)
        if len(g) - 1 != 0:
            return False
    return True


def _field_elements(field_size, ops):
    """Enumerate field elements by repeated addition of generators.

    Only valid for ops objects whose elements are integers 0..field_size-1
    acting as canonical codes (the tower module guarantees this).
    """
    return range(field_size)


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
