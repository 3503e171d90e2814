"""Sparse cyclic-polynomial residual backend with exact Prony recovery.

A T-sparse residual h_i = sum_nu a_nu * omega^(i * e_nu) is stored as its
coefficient-exponent pairs.  Recovery from 2T consecutive values solves the
Hankel system for the linear recurrence, scans the n candidate roots
omega^e (no generic factoring or discrete logs), and finishes with a
Vandermonde solve.
"""

from dataclasses import dataclass

from .errors import RootNotInGroup, SingularHankel, WrongOrder
from .residual import ceil_log


@dataclass(frozen=True)
class SparseResidualModel:
    n: int
    terms: tuple  # ((coefficient FieldElement, exponent int), ...) sorted by exponent

    def __post_init__(self):
        exps = [e for _, e in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("exponents must be pairwise distinct")
        if exps != sorted(exps):
            raise ValueError("terms must be sorted by exponent")
        if any(not 0 <= e < self.n for e in exps):
            raise ValueError("exponents must lie in [0, n)")
        if any(a.value == 0 for a, _ in self.terms):
            raise ValueError("coefficients must be nonzero")

    @property
    def T(self):
        return len(self.terms)


def sparse_eval(tower, model, omega):
    """Evaluate h_i = sum a * omega^(i*e) at i = 0..n-1."""
    n = model.n
    if omega.value == 0 or tower.element_order(omega) != n:
        raise WrongOrder(f"omega does not have order {n}")
    out = []
    for i in range(n):
        acc = tower.zero
        for a, e in model.terms:
            acc = tower.add(acc, tower.mul(a, tower.pow(omega, i * e)))
        out.append(acc)
    return out


def _solve_linear(tower, matrix, rhs):
    """Solve an s x s system over L by Gaussian elimination; None if singular."""
    s = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(s):
        pivot = next((r for r in range(col, s) if aug[r][col].value != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pinv = tower.inv(aug[col][col])
        aug[col] = [tower.mul(pinv, v) for v in aug[col]]
        for r in range(s):
            if r != col and aug[r][col].value != 0:
                factor = aug[r][col]
                aug[r] = [
                    tower.sub(a, tower.mul(factor, b))
                    for a, b in zip(aug[r], aug[col])
                ]
    return [aug[r][s] for r in range(s)]


def prony_recover(tower, h_prefix, T, omega):
    """Recover the T-term model from h_0..h_{2T-1}.

    Raises SingularHankel if the prefix is not exactly T-sparse over the
    evaluation group, RootNotInGroup if a recurrence root is not a power of
    omega; both signal a model violation rather than a solver failure.
    """
    n = tower.element_order(omega) if omega.value != 0 else 0
    if n == 0:
        raise WrongOrder("omega must be a root of unity")
    if 2 * T > n:
        raise WrongOrder(f"need 2T <= n, got T={T}, n={n}")
    if len(h_prefix) < 2 * T:
        raise WrongOrder(f"need 2T={2 * T} samples, got {len(h_prefix)}")
    if T == 0:
        return SparseResidualModel(n=n, terms=())

    # Hankel system for the recurrence h[i+T] = -sum_s Lambda_s h[i+s]
    hankel = [[h_prefix[r + s] for s in range(T)] for r in range(T)]
    rhs = [tower.sub(tower.zero, h_prefix[T + r]) for r in range(T)]
    lam = _solve_linear(tower, hankel, rhs)
    if lam is None:
        raise SingularHankel("prefix is not exactly T-sparse")

    # Lambda(Z) = Z^T + lam[T-1] Z^(T-1) + ... + lam[0]; scan roots in <omega>
    roots = []
    for e in range(n):
        z = tower.pow(omega, e)
        acc = tower.one
        for c in reversed(lam):
            acc = tower.add(tower.mul(acc, z), c)
        # acc currently = z^T + ... evaluated via Horner with leading 1
        if acc.value == 0:
            roots.append((e, z))
    if len(roots) != T:
        raise RootNotInGroup(
            f"found {len(roots)} recurrence roots in <omega>, expected {T}"
        )

    # Vandermonde solve for the coefficients
    vand = [[tower.pow(z, i) for _, z in roots] for i in range(T)]
    coeffs = _solve_linear(tower, vand, list(h_prefix[:T]))
    if coeffs is None or any(a.value == 0 for a in coeffs):
        raise SingularHankel("coefficient solve degenerate; model violated")

    terms = sorted(((a, e) for a, (e, _) in zip(coeffs, roots)), key=lambda t: t[1])
    model = SparseResidualModel(n=n, terms=tuple(terms))
    check = sparse_eval(tower, model, omega)[: 2 * T]
    if any(x != y for x, y in zip(check, h_prefix[: 2 * T])):
        raise SingularHankel("recovered model does not reproduce the prefix")
    return model


def sparse_cost(T, q, m, n):
    """Base-field symbol count T * (m + ceil(log_q n))."""
    return T * (m + ceil_log(q, n))


def prefer_sparse(T, support, q, m, n):
    """Backend choice: sparse model only when it is strictly cheaper than the
    support-value list."""
    return sparse_cost(T, q, m, n) < support * (m + ceil_log(q, n))


def detect_sparsity(tower, h, omega, max_T=None):
    """Advisory rank profiling: smallest T whose recovered model reproduces
    all of h, or None.  Not guaranteed; callers should supply T when known."""
    n = len(h)
    if max_T is None:
        max_T = n // 2
    for T in range(0, max_T + 1):
        try:
            model = prony_recover(tower, h[: 2 * T], T, omega)
        except (SingularHankel, RootNotInGroup):
            continue
        if sparse_eval(tower, model, omega) == list(h):
            return model
    return None
