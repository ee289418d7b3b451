"""Independent sympy reference computations used to freeze expected values.

Linear algebra runs in sympy's algebraic field QQ<exp(2 pi i / N)>; nothing here
calls into the package except to convert its scalars and matrices.
"""

from __future__ import annotations

from functools import lru_cache

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from unimodcat.exactmath import Matrix, Scalar

z = sp.Symbol("z")


@lru_cache(maxsize=None)
def field(N: int):
    if N <= 2:
        return sp.QQ, sp.QQ(-1) if N == 2 else sp.QQ(1)
    root = sp.exp(2 * sp.pi * sp.I / N)
    K = sp.QQ.algebraic_field(root)
    return K, K.from_sympy(root)


def zeta(N: int, k: int = 1):
    _, r = field(N)
    return r ** (k % N) if N > 1 else r


def to_k(s: Scalar, N: int):
    """A package scalar as an element of the oracle field."""
    K, r = field(N)
    if s.order != N:
        s = s.in_order(N)
    acc = K.zero
    for i, c in enumerate(s.coeffs):
        if c:
            acc += K.convert(sp.Rational(c.numerator, c.denominator)) * r**i
    return acc


def to_domain(m: Matrix, N: int) -> DomainMatrix:
    K, _ = field(N)
    return DomainMatrix([[to_k(s, N) for s in row] for row in m.to_scalars()], m.shape, K)


def reduce_expr(expr, N: int) -> sp.Expr:
    """Canonical representative of a polynomial in z modulo Phi_N."""
    return sp.Poly(sp.expand(expr), z).rem(sp.Poly(sp.cyclotomic_poly(N, z), z)).as_expr()


def to_sympy(s: Scalar) -> sp.Expr:
    return sum((sp.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(s.coeffs)), sp.Integer(0))


def sym_matrix(m: Matrix) -> sp.Matrix:
    return sp.Matrix([[to_sympy(s) for s in row] for row in m.to_scalars()])


def det_is_zero_poly(ops: list[Matrix], N: int) -> bool:
    """Whether det(sum t_k ops[k]) vanishes identically, by full symbolic expansion."""
    ts = sp.symbols(f"t0:{len(ops)}")
    total = sp.zeros(ops[0].rows, ops[0].cols)
    for t, op in zip(ts, ops):
        total += t * sym_matrix(op)
    det = sp.expand(total.det(method="berkowitz"))
    if det == 0:
        return True
    poly = sp.Poly(det, *ts)
    return all(reduce_expr(c, N) == 0 for c in poly.coeffs())


# Taft algebra by rewriting words in g and x --------------------------------

def taft_word_product(N: int, a: tuple[int, int], b: tuple[int, int]):
    """x^r g^s * x^t g^u as (r', s', coeff), moving each g past each x one swap at a time (g x = w x g)."""
    r, s = a
    t, u = b
    if r + t >= N:
        return None
    coeff = zeta(N, 0)
    for _ in range(s):
        for _ in range(t):
            coeff = coeff * zeta(N)
    return r + t, (s + u) % N, coeff


def taft_left_mult(N: int, h: int) -> DomainMatrix:
    K, _ = field(N)
    n = N * N
    rows = [[K.zero] * n for _ in range(n)]
    for j in range(n):
        p = taft_word_product(N, divmod(h, N), divmod(j, N))
        if p is not None:
            rows[p[0] * N + p[1]][j] = p[2]
    return DomainMatrix(rows, (n, n), K)


def taft_left_integrals(N: int) -> DomainMatrix:
    """Basis (as rows) of {L : g L = L, x L = 0}."""
    K, _ = field(N)
    n = N * N
    eye = DomainMatrix.eye(n, K)
    eqs = DomainMatrix.vstack(taft_left_mult(N, 1) - eye, taft_left_mult(N, N))
    return eqs.nullspace()


def nakayama_oracle(gram: DomainMatrix) -> DomainMatrix:
    """Solve form(b_a b_b) = form(nu(b_b) b_a) for nu.

    Entry (a, b) of the identity reads sum_k nu[k, b] gram[k, a] = gram[a, b],
    i.e. gram^T nu = gram, solved column by column in the oracle field.
    """
    return gram.transpose().lu_solve(gram)
