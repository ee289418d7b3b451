"""Closed-form builders: Taft and group Hopf algebras and their standard comodule algebras.

Taft basis: x^r g^s at index r*N + s.  A1 basis: X^r G^s at index r*d + s.
The cyclotomic order of every instance built over taft(N) is N.
"""

from __future__ import annotations

import itertools
from functools import partial
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import StructureAlgebra, tensor_left_apply
from .comodalg import ComoduleAlgebra
from .exactmath import Matrix, Scalar
from .hopf import HopfData

__all__ = [
    "FamilySpec",
    "a0",
    "a1",
    "build",
    "cyclic_table",
    "group_algebra",
    "klein_table",
    "named_group",
    "regular_comodule",
    "symmetric3_table",
    "taft",
    "taft_element",
    "taft_survey",
    "trivial_comodule",
]


def _monomial(name: str, k: int) -> str:
    return "" if k == 0 else (name if k == 1 else f"{name}^{k}")


def _mono_name(parts: Sequence[tuple[str, int]]) -> str:
    s = "".join(_monomial(n, k) for n, k in parts)
    return s or "1"


# Taft ----------------------------------------------------------------------

def taft(N: int) -> HopfData:
    """The N^2-dimensional Taft algebra over Q(zeta_N), omega = zeta_N."""
    if N <= 1:
        raise ValueError(f"Taft algebra needs N > 1, got {N}")
    names = [_mono_name([("x", r), ("g", s)]) for r in range(N) for s in range(N)]

    def product(i, j):
        r, s = divmod(i, N)
        t, u = divmod(j, N)
        if r + t >= N:
            return {}
        # g^s x^t = omega^{st} x^t g^s
        return {(r + t) * N + (s + u) % N: Scalar.zeta(N, s * t)}

    alg = StructureAlgebra.from_products(names, product, {0: 1}, N)
    n = N * N
    g = alg.basis_vector(1)
    x = alg.basis_vector(N)
    one = alg.unit
    g_inv = alg.basis_vector(N - 1)

    def tensor_mul(u, v):
        return tensor_left_apply(alg, alg, u, v)

    delta_g = g.kron(g)
    delta_x = x.kron(one) + g.kron(x)
    s_g = g_inv
    s_x = -alg.product(g_inv, x)
    comult_cols, antipode_cols, counit = [], [], []
    for i in range(n):
        r, s = divmod(i, N)
        d = one.kron(one)
        sv = one
        for _ in range(r):
            d = tensor_mul(d, delta_x)
            sv = alg.product(s_x, sv)  # antihomomorphism
        for _ in range(s):
            d = tensor_mul(d, delta_g)
            sv = alg.product(s_g, sv)
        comult_cols.append(d)
        antipode_cols.append(sv)
        counit.append(1 if r == 0 else 0)
    return HopfData(
        alg,
        Matrix.hstack(comult_cols),
        Matrix.row(counit, N),
        Matrix.hstack(antipode_cols),
    )


def taft_element(N: int, r: int, s: int) -> Matrix:
    """Basis vector x^r g^s of taft(N)."""
    return Matrix.unit_vector(N * N, r * N + s % N, N)


def taft_survey(N: int, xis: Sequence, hopf: HopfData | None = None) -> list[tuple[str, Callable[[], ComoduleAlgebra]]]:
    """Labelled builders for every A0(d) and A1(d, xi) over taft(N), d | N, in survey order."""
    H = hopf or taft(N)
    divs = [d for d in range(1, N + 1) if N % d == 0]
    out: list[tuple[str, Callable[[], ComoduleAlgebra]]] = [(f"A0(d={d})", partial(a0, N, d, H)) for d in divs]
    for d in divs:
        for xi in xis:
            xs = Scalar.coerce(xi, N).in_order(N)
            out.append((f"A1(d={d}, xi={xs})", partial(a1, N, d, xs, H)))
    return out


# group algebras --------------------------------------------------------------

def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table() -> list[list[int]]:
    return [[i ^ j for j in range(4)] for i in range(4)]


def symmetric3_table() -> tuple[list[list[int]], list[str]]:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}
    # (p q)(k) = p(q(k))
    table = [[index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    names = ["".join(map(str, p)) for p in perms]
    return table, names


def _check_group(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if any(len(row) != n or any(not 0 <= v < n for v in row) for row in table):
        raise ValueError("Cayley table must be square with entries in range")
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise ValueError(f"Cayley table not associative at {(i, j, k)}")
    ident = [e for e in range(n) if all(table[e][i] == i == table[i][e] for i in range(n))]
    if not ident:
        raise ValueError("Cayley table has no identity")
    e = ident[0]
    for i in range(n):
        if not any(table[i][j] == e for j in range(n)):
            raise ValueError(f"element {i} has no inverse")
    return e


def group_algebra(table: Sequence[Sequence[int]], names: Sequence[str] | None = None, order: int = 1) -> HopfData:
    e = _check_group(table)
    n = len(table)
    names = list(names) if names is not None else [f"u{i}" for i in range(n)]
    alg = StructureAlgebra.from_products(names, lambda i, j: {table[i][j]: 1}, {e: 1}, order)
    inv = [next(j for j in range(n) if table[i][j] == e) for i in range(n)]
    comult = Matrix.hstack([alg.basis_vector(i).kron(alg.basis_vector(i)) for i in range(n)])
    antipode = Matrix.hstack([alg.basis_vector(inv[i]) for i in range(n)])
    hd = HopfData(alg, comult, Matrix.row([1] * n, order), antipode)
    if not (hd.is_unimodular and hd.is_dual_unimodular):
        raise AssertionError("group algebra must be unimodular and dual unimodular")
    return hd


# comodule algebras -----------------------------------------------------------

def _divisor_check(N: int, d: int) -> int:
    if N <= 1 or d < 1 or N % d:
        raise ValueError(f"need N > 1 and d | N, got N={N}, d={d}")
    return N // d


def _taft_grouplike_powers(N: int) -> list[Matrix]:
    return [taft_element(N, 0, s) for s in range(N)]


def a0(N: int, d: int, hopf: HopfData | None = None) -> ComoduleAlgebra:
    """k<G | G^d = 1> with delta(G) = g^m (x) G, m = N/d."""
    m = _divisor_check(N, d)
    H = hopf or taft(N)
    names = [_mono_name([("G", r)]) for r in range(d)]
    alg = StructureAlgebra.from_products(names, lambda i, j: {(i + j) % d: 1}, {0: 1}, N)
    cols = [taft_element(N, 0, m * r).kron(alg.basis_vector(r)) for r in range(d)]
    form = Matrix.unit_vector(d, 0, N).T
    return ComoduleAlgebra(
        H, alg, Matrix.hstack(cols), forms={"standard": form}, candidates=_taft_grouplike_powers(N)
    )


def a1(N: int, d: int, xi, hopf: HopfData | None = None) -> ComoduleAlgebra:
    """k<G, X | G^d = 1, X^N = xi, G X = omega^m X G> with delta(G) = g^m (x) G, delta(X) = x (x) 1 + g (x) X."""
    m = _divisor_check(N, d)
    xi = Scalar.coerce(xi, N).in_order(N)
    H = hopf or taft(N)
    names = [_mono_name([("X", r), ("G", s)]) for r in range(N) for s in range(d)]

    def product(i, j):
        r, s = divmod(i, d)
        t, u = divmod(j, d)
        # G^s X^t = omega^{m s t} X^t G^s, and X^N = xi
        coeff = Scalar.zeta(N, m * s * t)
        e = r + t
        if e >= N:
            coeff = coeff * xi
            e -= N
        if coeff.is_zero():
            return {}
        return {e * d + (s + u) % d: coeff}

    alg = StructureAlgebra.from_products(names, product, {0: 1}, N)
    halg = H.algebra
    one_h = halg.unit

    def tensor_mul(u, v):
        return tensor_left_apply(halg, alg, u, v)

    X = alg.basis_vector(d)
    G = alg.basis_vector(1 % d) if d > 1 else alg.unit
    delta_G = taft_element(N, 0, m).kron(G)
    delta_X = taft_element(N, 1, 0).kron(alg.unit) + taft_element(N, 0, 1).kron(X)
    cols = []
    for i in range(N * d):
        r, s = divmod(i, d)
        acc = one_h.kron(alg.unit)
        for _ in range(r):
            acc = tensor_mul(acc, delta_X)
        for _ in range(s):
            acc = tensor_mul(acc, delta_G)
        cols.append(acc)
    form = Matrix.unit_vector(N * d, (N - 1) * d, N).T
    # the standard form is a g^-1-cointegral; listing g^-1 first makes it the form in use
    powers = _taft_grouplike_powers(N)
    return ComoduleAlgebra(
        H, alg, Matrix.hstack(cols), forms={"standard": form}, candidates=[powers[-1]] + powers[:-1]
    )


def _group_like_basis(H: HopfData) -> list[Matrix]:
    """Basis elements of H that are grouplike (all of them for group algebras)."""
    return [H.algebra.basis_vector(i) for i in range(H.dim) if H.is_grouplike(H.algebra.basis_vector(i))]


def trivial_comodule(H: HopfData) -> ComoduleAlgebra:
    alg = StructureAlgebra.from_products(["1"], lambda i, j: {0: 1}, {0: 1}, H.order)
    form = Matrix.row([1], H.order)
    return ComoduleAlgebra(
        H, alg, H.unit.kron(alg.unit), forms={"standard": form}, candidates=[H.unit] + _group_like_basis(H)
    )


def regular_comodule(H: HopfData) -> ComoduleAlgebra:
    return ComoduleAlgebra(
        H, H.algebra, H.comult, forms={"cointegral": H.cointegral}, candidates=[H.unit] + _group_like_basis(H)
    )


# dispatch --------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    family: str  # taft | group | a0 | a1 | trivial | regular
    N: int | None = None
    d: int | None = None
    xi: object = None
    group: str | None = None  # "Z<n>" | "klein" | "S3", for group-based instances
    base: str = "taft"  # Hopf algebra under trivial/regular: "taft" or "group"
    extra: dict = field(default_factory=dict)


def named_group(name: str) -> HopfData:
    if name.lower() in ("klein", "v4", "z2xz2"):
        return group_algebra(klein_table(), ["e", "a", "b", "ab"])
    if name.upper() == "S3":
        table, names = symmetric3_table()
        return group_algebra(table, names)
    if name.upper().startswith("Z"):
        n = int(name[1:])
        return group_algebra(cyclic_table(n), [_mono_name([("u", k)]) for k in range(n)])
    raise ValueError(f"unknown group {name!r}")


def build(spec: FamilySpec):
    if spec.family == "taft":
        return taft(spec.N)
    if spec.family == "group":
        return named_group(spec.group)
    if spec.family == "a0":
        return a0(spec.N, spec.d)
    if spec.family == "a1":
        return a1(spec.N, spec.d, spec.xi)
    if spec.family in ("trivial", "regular"):
        H = named_group(spec.group) if spec.base == "group" else taft(spec.N)
        return trivial_comodule(H) if spec.family == "trivial" else regular_comodule(H)
    raise ValueError(f"unknown family {spec.family!r}")
