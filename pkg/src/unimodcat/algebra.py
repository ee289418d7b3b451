"""Finite-dimensional unital algebras given by structure constants, and Frobenius systems.

The product is stored as an ``n x n^2`` matrix whose column ``i*n + j`` holds the
coordinates of ``b_i b_j``.  Vectors are columns, functionals are rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .exactmath import Matrix, Scalar, Subspace, solve, symbolic_determinant
from .exactmath.pit import PIT_SEED, invertible_in_subspace
from .report import AxiomReport, ConsistencyError

__all__ = [
    "FormSearch",
    "FrobeniusSystem",
    "StructureAlgebra",
    "dual_bases",
    "frobenius_form",
    "frobenius_system",
    "gram_matrix",
    "is_invertible",
    "nakayama",
    "verify_algebra",
    "verify_frobenius_system",
]

FORM_TRIALS = 64
FORM_RANGE = 3  # random form coefficients are drawn from [-FORM_RANGE, FORM_RANGE]
SYMBOLIC_FORM_MAX_DIM = 6


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    mult: Matrix
    unit: Matrix
    names: tuple[str, ...]

    def __post_init__(self):
        n = self.unit.rows
        if self.mult.shape != (n, n * n) or self.unit.cols != 1 or len(self.names) != n:
            raise ValueError(f"inconsistent algebra shapes: mult {self.mult.shape}, unit {self.unit.shape}")

    @classmethod
    def from_products(
        cls,
        names: Sequence[str],
        product: Callable[[int, int], Mapping[int, object]],
        unit: Mapping[int, object],
        order: int = 1,
    ) -> StructureAlgebra:
        """``product(i, j)`` returns ``{k: coefficient}`` for ``b_i b_j``."""
        n = len(names)
        rows = [[Scalar(0, order)] * (n * n) for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, c in product(i, j).items():
                    rows[k][i * n + j] = Scalar.coerce(c, order)
        u = [Scalar.coerce(unit.get(k, 0), order) for k in range(n)]
        return cls(Matrix.from_scalars(rows, order, (n, n * n)), Matrix.column(u, order), tuple(names))

    @property
    def dim(self) -> int:
        return self.unit.rows

    @property
    def order(self) -> int:
        return self.mult.order

    def basis_vector(self, i: int) -> Matrix:
        return Matrix.unit_vector(self.dim, i, self.order)

    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.order)

    @cached_property
    def left_ops(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(self.mult[:, i * n : (i + 1) * n] for i in range(n))

    @cached_property
    def right_ops(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(self.mult[:, j : n * n : n] for j in range(n))

    def left(self, a: Matrix) -> Matrix:
        """Matrix of x -> a x."""
        return self.mult @ a.kron(self.identity())

    def right(self, a: Matrix) -> Matrix:
        """Matrix of x -> x a."""
        return self.mult @ self.identity().kron(a)

    def product(self, a: Matrix, b: Matrix) -> Matrix:
        return self.mult @ a.kron(b)

    def mult_after(self, p: Matrix, q: Matrix) -> Matrix:
        """mult @ (p (x) q), computed leg by leg."""
        return leg_apply(self.mult.T, (self.dim, self.dim), p.T, q.T).T

    def power(self, a: Matrix, k: int) -> Matrix:
        if k < 0:
            inv = is_invertible(self, a)
            if inv is None:
                raise ValueError("negative power of a non-invertible element")
            return self.power(inv, -k)
        acc = self.unit
        for _ in range(k):
            acc = self.product(acc, a)
        return acc

    def is_automorphism(self, sigma: Matrix) -> bool:
        return (
            sigma.is_invertible()
            and sigma @ self.unit == self.unit
            and sigma @ self.mult == self.mult_after(sigma, sigma)
        )

    def subalgebra_span(self, gens: Sequence[Matrix]) -> Subspace:
        span = Subspace.from_vectors(self.unit)
        frontier = [self.unit]
        while frontier:
            new = []
            for v in frontier:
                for g in gens:
                    w = self.product(v, g)
                    if not span.contains(w):
                        span = Subspace.from_vectors(Matrix.hstack([span.basis(), w]))
                        new.append(w)
            frontier = new
        return span

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        """Basis indices that generate the algebra (greedy, in basis order)."""
        chosen: list[int] = []
        span = self.subalgebra_span([])
        for i in range(self.dim):
            if span.dim == self.dim:
                break
            b = self.basis_vector(i)
            if not span.contains(b):
                chosen.append(i)
                span = self.subalgebra_span([self.basis_vector(k) for k in chosen])
        return tuple(chosen)

    def center(self) -> Subspace:
        eqs = Matrix.vstack([L - R for L, R in zip(self.left_ops, self.right_ops)])
        return Subspace.kernel(eqs)

    def element_str(self, v: Matrix) -> str:
        terms = []
        for i, s in enumerate(v.to_list()):
            if s.is_zero():
                continue
            coeff = str(s)
            if coeff == "1":
                terms.append(self.names[i])
            elif coeff == "-1":
                terms.append("-" + self.names[i])
            else:
                terms.append(f"({coeff})*{self.names[i]}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def verify_algebra(alg: StructureAlgebra) -> AxiomReport:
    rep = AxiomReport("algebra")
    eye = alg.identity()
    triples = associativity_violations(alg)
    shown = ", ".join(map(str, triples[:8])) + (" ..." if len(triples) > 8 else "")
    rep.check("associativity", not triples, f"violated (i,j,k): {shown}")
    rep.check("left unit", alg.left(alg.unit) == eye)
    rep.check("right unit", alg.right(alg.unit) == eye)
    return rep


def associativity_violations(alg: StructureAlgebra) -> list[tuple[int, int, int]]:
    n = alg.dim
    # column (k, i, j) of lhs is (b_i b_j) b_k; column (i, j, k) of rhs is b_i (b_j b_k)
    lhs = Matrix.hstack([R @ alg.mult for R in alg.right_ops])
    lhs = lhs.T.permute_rows((n, n, n), (1, 2, 0)).T
    rhs = Matrix.hstack([L @ alg.mult for L in alg.left_ops])
    diff = lhs - rhs
    return [(c // (n * n), c // n % n, c % n) for c in sorted({c for _, c in diff.nonzero_entries()})]


def gram_matrix(alg: StructureAlgebra, form: Matrix) -> Matrix:
    """G[i, j] = form(b_i b_j)."""
    return (form @ alg.mult).reshape(alg.dim, alg.dim)


def _is_frobenius(alg: StructureAlgebra, form: Matrix) -> bool:
    return gram_matrix(alg, form).is_invertible()


@dataclass(frozen=True)
class FormSearch:
    form: Matrix | None
    certified: bool  # True when a None result is proven
    method: str  # "coordinate" | "random" | "symbolic" | "exhausted"


def frobenius_form(alg: StructureAlgebra, seed: int = PIT_SEED) -> FormSearch:
    n = alg.dim
    order = alg.order
    for k in range(n):
        form = Matrix.unit_vector(n, k, order).T
        if _is_frobenius(alg, form):
            return FormSearch(form, True, "coordinate")
    rng = random.Random(seed)
    for _ in range(FORM_TRIALS):
        form = Matrix.row([rng.randint(-FORM_RANGE, FORM_RANGE) for _ in range(n)], order)
        if _is_frobenius(alg, form):
            return FormSearch(form, True, "random")
    if n > SYMBOLIC_FORM_MAX_DIM:
        return FormSearch(None, False, "exhausted")
    grams = [gram_matrix(alg, Matrix.unit_vector(n, k, order).T) for k in range(n)]
    if not symbolic_determinant(grams):
        return FormSearch(None, True, "symbolic")
    hit = invertible_in_subspace(grams)
    form = Matrix.row(list(hit.witness), order)
    return FormSearch(form, True, "symbolic")


def dual_bases(alg: StructureAlgebra, form: Matrix, b_basis: Matrix | None = None) -> tuple[Matrix, Matrix]:
    """Columns a^i and b_i with form(a^i b_j) = delta_ij."""
    gram = gram_matrix(alg, form)
    if not gram.is_invertible():
        raise ValueError("not a Frobenius form: Gram matrix is singular")
    ginv = gram.inverse()
    if b_basis is None:
        return ginv.T, alg.identity()
    return (b_basis.inverse() @ ginv).T, b_basis


def nakayama(alg: StructureAlgebra, form: Matrix) -> Matrix:
    """The automorphism with form(a b) = form(nakayama(b) a)."""
    gram = gram_matrix(alg, form)
    nu = gram.T.inverse() @ gram
    if not nu.T @ gram == gram.T:
        raise ConsistencyError("Nakayama relation fails")
    if not alg.is_automorphism(nu):
        raise ConsistencyError("Nakayama map is not a unital algebra automorphism")
    return nu


@dataclass(frozen=True, eq=False)
class FrobeniusSystem:
    form: Matrix
    a_dual: Matrix
    b_basis: Matrix
    nakayama: Matrix

    def pairs(self):
        for i in range(self.a_dual.cols):
            yield self.a_dual.col(i), self.b_basis.col(i)


def frobenius_system(alg: StructureAlgebra, form: Matrix, b_basis: Matrix | None = None) -> FrobeniusSystem:
    a, b = dual_bases(alg, form, b_basis)
    return FrobeniusSystem(form, a, b, nakayama(alg, form))


def verify_frobenius_system(alg: StructureAlgebra, fs: FrobeniusSystem) -> AxiomReport:
    rep = AxiomReport("Frobenius system")
    n = alg.dim
    lam, P, Q, nu = fs.form, fs.a_dual, fs.b_basis, fs.nakayama
    pairing = (lam @ alg.mult_after(P, Q)).reshape(n, n)
    rep.check("pairing form(a^i b_j) = delta", pairing.is_identity())
    rep.check("form(a^i) b_i = 1", Q @ (lam @ P).T == alg.unit)
    rep.check("form(b_i) a^i = 1", P @ (lam @ Q).T == alg.unit)
    casimir = P @ Q.T
    bad_mid = [c for c in range(n) if not alg.right_ops[c] @ casimir == casimir @ alg.left_ops[c].T]
    rep.check("a^i c (x) b_i = a^i (x) c b_i", not bad_mid, f"fails for c = {bad_mid}")
    bad_nak = [
        c for c in range(n) if not alg.left(nu.col(c)) @ casimir == casimir @ alg.right_ops[c].T
    ]
    rep.check("nu(c) a^i (x) b_i = a^i (x) b_i c", not bad_nak, f"fails for c = {bad_nak}")
    rep.check("nakayama is an automorphism", alg.is_automorphism(nu))
    return rep


def is_invertible(alg: StructureAlgebra, a: Matrix) -> Matrix | None:
    """Two-sided inverse of ``a`` if it exists."""
    x, _ = solve(alg.left(a), alg.unit)
    if x is None:
        return None
    if not (alg.product(a, x) == alg.unit and alg.product(x, a) == alg.unit):
        raise ConsistencyError("one-sided inverse in a finite-dimensional algebra")
    return x


def leg_apply(t: Matrix, dims: tuple[int, int], left: Matrix | None = None, right: Matrix | None = None) -> Matrix:
    """(left (x) right) @ t for ``t`` whose rows are indexed by pairs (i, k) -> i*dims[1] + k.

    Either side may be omitted (identity).  Avoids forming the Kronecker product.
    """
    d1, d2 = dims
    c = t.cols
    if left is not None:
        t = (left @ t.reshape(d1, d2 * c)).reshape(left.rows * d2, c)
        d1 = left.rows
    if right is not None:
        s = t.permute_rows((d1, d2), (1, 0))
        s = (right @ s.reshape(d2, d1 * c)).reshape(right.rows * d1, c)
        t = s.permute_rows((right.rows, d1), (1, 0))
    return t


def tensor_left_apply(alg1: StructureAlgebra, alg2: StructureAlgebra, u: Matrix, t: Matrix) -> Matrix:
    """Left multiplication by ``u`` in alg1 (x) alg2, applied to the columns of ``t``."""
    acc = None
    n2 = alg2.dim
    for r, _ in u.nonzero_entries():
        a, b = divmod(r, n2)
        term = leg_apply(t, (alg1.dim, n2), alg1.left_ops[a], alg2.left_ops[b]) * u.entry(r, 0)
        acc = term if acc is None else acc + term
    if acc is None:
        return Matrix.zeros(t.rows, t.cols, t.order)
    return acc
