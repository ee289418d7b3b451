"""Finite-dimensional Hopf algebras: axioms, (co)integrals and the derived invariants.

Tensor legs are ordered (i, k) -> i*n + k throughout.  ``comult`` is the
``n^2 x n`` matrix of the comultiplication, ``counit`` a ``1 x n`` row and
``antipode`` an ``n x n`` matrix.
"""

from __future__ import annotations

from functools import cached_property

from .algebra import StructureAlgebra, is_invertible, leg_apply, nakayama, tensor_left_apply, verify_algebra
from .exactmath import Matrix, Subspace
from .report import AxiomReport, ConsistencyError

__all__ = [
    "HopfData",
    "InvalidHopfData",
    "distinguished_character",
    "distinguished_grouplike",
    "distinguished_object",
    "hopf_nakayama",
    "left_integral",
    "radford_iso",
    "right_cointegral",
    "verify_hopf",
    "verify_radford_s4",
]


class InvalidHopfData(ValueError):
    def __init__(self, report: AxiomReport):
        self.report = report
        failed = ", ".join(a for a, _ in report.failures)
        super().__init__(f"invalid Hopf data: {failed}")


class HopfData:
    """A Hopf algebra with invertible antipode; invariants are computed and validated eagerly."""

    def __init__(
        self,
        algebra: StructureAlgebra,
        comult: Matrix,
        counit: Matrix,
        antipode: Matrix,
        validate: bool = True,
    ):
        n = algebra.dim
        if comult.shape != (n * n, n) or counit.shape != (1, n) or antipode.shape != (n, n):
            raise ValueError("inconsistent Hopf data shapes")
        self.algebra = algebra
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        if validate:
            report = verify_hopf(self)
            if not report.ok:
                raise InvalidHopfData(report)
            for name in ("integral", "alpha", "cointegral", "grouplike", "nakayama", "nakayama_inverse"):
                getattr(self, name)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def order(self) -> int:
        return self.algebra.order

    @property
    def unit(self) -> Matrix:
        return self.algebra.unit

    def delta(self, h: Matrix) -> Matrix:
        return self.comult @ h

    def is_grouplike(self, g: Matrix) -> bool:
        return not g.is_zero() and self.comult @ g == g.kron(g) and (self.counit @ g).entry(0, 0) == 1

    # antipode powers ------------------------------------------------------
    @cached_property
    def antipode_inverse(self) -> Matrix:
        return self.antipode.inverse()

    def s_power(self, k: int) -> Matrix:
        return self._s_powers(k)

    def _s_powers(self, k: int) -> Matrix:
        cache = self.__dict__.setdefault("_spow", {})
        if k not in cache:
            base = self.antipode if k >= 0 else self.antipode_inverse
            cache[k] = base.power(abs(k)) if k else Matrix.identity(self.dim, self.order)
        return cache[k]

    # invariants -----------------------------------------------------------
    @cached_property
    def integral(self) -> Matrix:
        return left_integral(self)

    @cached_property
    def alpha(self) -> Matrix:
        return distinguished_character(self, self.integral)

    @cached_property
    def alpha_bar(self) -> Matrix:
        return self.alpha @ self.antipode

    @cached_property
    def cointegral(self) -> Matrix:
        return right_cointegral(self)

    @cached_property
    def grouplike(self) -> Matrix:
        return distinguished_grouplike(self, self.cointegral)

    @cached_property
    def grouplike_inverse(self) -> Matrix:
        inv = is_invertible(self.algebra, self.grouplike)
        if inv is None:
            raise ConsistencyError("distinguished grouplike is not invertible")
        return inv

    @cached_property
    def nakayama(self) -> Matrix:
        return hopf_nakayama(self)

    @cached_property
    def nakayama_inverse(self) -> Matrix:
        g, gbar = self.grouplike, self.grouplike_inverse
        alg = self.algebra
        nubar = self.s_power(2) @ alg.left(gbar) @ alg.right(g) @ leg_apply(
            self.comult, (self.dim, self.dim), right=self.alpha_bar
        )
        if not (self.nakayama @ nubar).is_identity():
            raise ConsistencyError("closed-form inverse Nakayama map is not the inverse")
        return nubar

    @property
    def is_unimodular(self) -> bool:
        return self.alpha == self.counit

    @property
    def is_dual_unimodular(self) -> bool:
        return self.grouplike == self.unit


def verify_hopf(hd: HopfData) -> AxiomReport:
    """Itemized checks; empty failure list iff valid Hopf algebra with invertible antipode."""
    rep = AxiomReport("hopf")
    alg = hd.algebra
    rep.extend(verify_algebra(alg))
    if not rep.ok:
        return rep
    n = alg.dim
    D, eps, S = hd.comult, hd.counit, hd.antipode
    dims = (n, n)
    rep.check("coassociativity", leg_apply(D, dims, left=D) == leg_apply(D, dims, right=D))
    eye = alg.identity()
    rep.check("counit law", leg_apply(D, dims, left=eps) == eye and leg_apply(D, dims, right=eps) == eye)
    rep.check("comultiplication unital", D @ alg.unit == alg.unit.kron(alg.unit))
    bad = [
        alg.names[g]
        for g in alg.generator_indices
        if not D @ alg.left_ops[g] == tensor_left_apply(alg, alg, D.col(g), D)
    ]
    rep.check("comultiplication multiplicative", not bad, f"fails for generators {bad}")
    rep.check(
        "counit is an algebra map",
        eps @ alg.mult == eps.kron(eps) and (eps @ alg.unit).entry(0, 0) == 1,
    )
    ueps = alg.unit @ eps
    rep.check("antipode axiom m(S (x) id)D = u eps", alg.mult @ leg_apply(D, dims, left=S) == ueps)
    rep.check("antipode axiom m(id (x) S)D = u eps", alg.mult @ leg_apply(D, dims, right=S) == ueps)
    rep.check("antipode invertible", S.is_invertible())
    return rep


def left_integral(hd: HopfData) -> Matrix:
    """Echelon-normalized generator of {L : h L = eps(h) L}."""
    alg = hd.algebra
    eye = alg.identity()
    eqs = Matrix.vstack([alg.left_ops[g] - eye * hd.counit.entry(0, g) for g in alg.generator_indices] or [Matrix.zeros(0, alg.dim, alg.order)])
    space = Subspace.kernel(eqs)
    if space.dim != 1:
        raise ConsistencyError(f"left integral space has dimension {space.dim}, expected 1")
    return space.basis()


def distinguished_character(hd: HopfData, integral: Matrix) -> Matrix:
    """alpha with integral*h = alpha(h) integral."""
    alg = hd.algebra
    right_mult = alg.mult @ integral.kron(alg.identity())
    p = next(i for i, _ in integral.nonzero_entries())
    alpha = right_mult[p, :] / integral.entry(p, 0)
    if not right_mult == integral @ alpha:
        raise ConsistencyError("integral*h is not proportional to the integral")
    if not (alpha @ alg.mult == alpha.kron(alpha) and (alpha @ alg.unit).entry(0, 0) == 1):
        raise ConsistencyError("distinguished character is not an algebra map")
    return alpha


def right_cointegral(hd: HopfData) -> Matrix:
    """The functional with lambda(h_1) h_2 = lambda(h) 1, scaled so lambda(integral) = 1."""
    n = hd.dim
    # unknown lambda_i; equation row (k, j): sum_i lambda_i D[(i,k), j] - u_k lambda_j = 0
    eqs = hd.comult.reshape(n**3, 1).permute_rows((n, n, n), (1, 2, 0)).reshape(n * n, n)
    eqs = eqs - hd.unit.kron(hd.algebra.identity())
    space = Subspace.kernel(eqs)
    if space.dim != 1:
        raise ConsistencyError(f"right cointegral space has dimension {space.dim}, expected 1")
    lam = space.basis().T
    pairing = (lam @ hd.integral).entry(0, 0)
    if pairing.is_zero():
        raise ConsistencyError("cointegral vanishes on the integral")
    return lam / pairing


def distinguished_grouplike(hd: HopfData, cointegral: Matrix) -> Matrix:
    """g with h_1 lambda(h_2) = lambda(h) g."""
    K = leg_apply(hd.comult, (hd.dim, hd.dim), right=cointegral)
    j = next(c for _, c in cointegral.nonzero_entries())
    g = K.col(j) / cointegral.entry(0, j)
    if not K == g @ cointegral:
        raise ConsistencyError("h_1 lambda(h_2) is not proportional to lambda")
    if not hd.is_grouplike(g) or is_invertible(hd.algebra, g) is None:
        raise ConsistencyError("distinguished grouplike is not an invertible grouplike")
    return g


def hopf_nakayama(hd: HopfData) -> Matrix:
    """h -> alpha(h_1) S^2(h_2), cross-checked against the Frobenius Nakayama map of the cointegral."""
    nu = hd.s_power(2) @ leg_apply(hd.comult, (hd.dim, hd.dim), left=hd.alpha)
    if not nu == nakayama(hd.algebra, hd.cointegral):
        raise ConsistencyError("closed-form Nakayama map disagrees with the cointegral's")
    return nu


def verify_radford_s4(hd: HopfData) -> bool:
    """S^4(h) = g [alpha_bar(h_1) h_2 alpha(h_3)] g^{-1} on every basis element.

    With alpha from a left integral and g from a right cointegral, the
    character with the antipode sits on the first leg.
    """
    n = hd.dim
    alg = hd.algebra
    inner = leg_apply(hd.comult, (n, n), left=hd.alpha_bar)  # (alpha_bar (x) id) D
    rhs = alg.left(hd.grouplike) @ alg.right(hd.grouplike_inverse) @ leg_apply(
        hd.comult, (n, n), left=inner, right=hd.alpha
    )
    return hd.s_power(4) == rhs


def radford_iso(hd: HopfData, module) -> Matrix:
    """Matrix of x -> g^{-1} x on a module, checked to intertwine the two twisted actions.

    The domain carries h -> sum rho(S^2 h_1) alpha_bar(h_2), the codomain
    h -> sum alpha_bar(h_1) rho(S^-2 h_2).
    """
    n = hd.dim
    iso = module.act(hd.grouplike_inverse)
    src = hd.s_power(2) @ leg_apply(hd.comult, (n, n), right=hd.alpha_bar)
    tgt = hd.s_power(-2) @ leg_apply(hd.comult, (n, n), left=hd.alpha_bar)
    for g in hd.algebra.generator_indices:
        if not iso @ module.act(src.col(g)) == module.act(tgt.col(g)) @ iso:
            raise ConsistencyError(f"Radford map fails to intertwine at {hd.algebra.names[g]}")
    return iso


def distinguished_object(hd: HopfData):
    """The 1-dimensional modules D (h -> alpha(S h)) and N(k) (h -> alpha(h))."""
    from .repmod import FinModule

    if not hd.counit @ hd.nakayama == hd.alpha:
        raise ConsistencyError("trivial module twisted by the Nakayama map is not alpha")
    d_obj = FinModule.from_character(hd.algebra, hd.alpha_bar)
    n_obj = FinModule.from_character(hd.algebra, hd.alpha)
    return d_obj, n_obj
