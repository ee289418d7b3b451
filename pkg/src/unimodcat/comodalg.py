"""Left comodule algebras over a Hopf algebra and their twisted automorphisms.

The coaction is an ``(n*m) x m`` matrix; column j holds the coordinates of
delta(b_j) in H (x) A under (i, k) -> i*m + k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .algebra import (
    FrobeniusSystem,
    StructureAlgebra,
    frobenius_form,
    frobenius_system,
    gram_matrix,
    is_invertible,
    leg_apply,
    tensor_left_apply,
    verify_algebra,
)
from .exactmath import Matrix, Subspace, invertible_in_subspace
from .hopf import HopfData
from .report import AxiomReport, ConsistencyError

__all__ = [
    "ComoduleAlgebra",
    "GrouplikeCointegral",
    "InvalidComoduleAlgebra",
    "grouplike_cointegral",
    "im_element",
    "nu_tilde",
    "serre_twist",
    "verify_comodule_algebra",
    "verify_im_simplification",
]


class InvalidComoduleAlgebra(ValueError):
    def __init__(self, report: AxiomReport):
        self.report = report
        super().__init__("invalid comodule algebra: " + ", ".join(a for a, _ in report.failures))


@dataclass(frozen=True, eq=False)
class GrouplikeCointegral:
    grouplike: Matrix
    form: Matrix
    nondegenerate: bool


class ComoduleAlgebra:
    """A left H-comodule algebra with a chosen Frobenius system.

    Form selection when ``form`` is None: a nondegenerate grouplike cointegral
    among ``candidates``, else the first attached form, else a searched one.
    """

    def __init__(
        self,
        hopf: HopfData,
        algebra: StructureAlgebra,
        coaction: Matrix,
        forms: Mapping[str, Matrix] | None = None,
        candidates: Sequence[Matrix] = (),
        form: str | Matrix | None = None,
        b_basis: Matrix | None = None,
        validate: bool = True,
    ):
        n, m = hopf.dim, algebra.dim
        if coaction.shape != (n * m, m):
            raise ValueError(f"coaction must be {n * m}x{m}, got {coaction.shape}")
        self.hopf = hopf
        self.algebra = algebra
        self.coaction = coaction
        self.forms: dict[str, Matrix] = dict(forms or {})
        self.candidates: tuple[Matrix, ...] = tuple(candidates)
        self._form_request = form
        self._b_basis = b_basis
        if validate:
            report = verify_comodule_algebra(self)
            if not report.ok:
                raise InvalidComoduleAlgebra(report)
            for name in ("frob", "serre_twist", "nu_tilde", "im_element"):
                getattr(self, name)

    @property
    def dims(self) -> tuple[int, int]:
        return self.hopf.dim, self.algebra.dim

    @property
    def order(self) -> int:
        return self.algebra.order

    def delta(self, a: Matrix) -> Matrix:
        return self.coaction @ a

    def _replace(self, **kw) -> ComoduleAlgebra:
        args = dict(
            hopf=self.hopf,
            algebra=self.algebra,
            coaction=self.coaction,
            forms=self.forms,
            candidates=self.candidates,
            form=self._form_request,
            b_basis=self._b_basis,
        )
        args.update(kw)
        return ComoduleAlgebra(**args)

    def with_form(self, form: str | Matrix) -> ComoduleAlgebra:
        return self._replace(form=form)

    def with_b_basis(self, b_basis: Matrix) -> ComoduleAlgebra:
        return self._replace(b_basis=b_basis)

    # Frobenius data -------------------------------------------------------
    @cached_property
    def grouplike_cointegral(self) -> GrouplikeCointegral | None:
        return grouplike_cointegral(self, self.candidates)

    @cached_property
    def form_choice(self) -> tuple[str, Matrix]:
        req = self._form_request
        if isinstance(req, Matrix):
            return "custom", req
        if isinstance(req, str):
            if req not in self.forms:
                raise KeyError(f"no attached Frobenius form named {req!r}; have {sorted(self.forms)}")
            return req, self.forms[req]
        gc = self.grouplike_cointegral
        if gc is not None and gc.nondegenerate:
            return "grouplike-cointegral", gc.form
        if self.forms:
            name = next(iter(self.forms))
            return name, self.forms[name]
        found = frobenius_form(self.algebra)
        if found.form is None:
            raise ConsistencyError("no Frobenius form found on the comodule algebra")
        return "searched", found.form

    @property
    def form(self) -> Matrix:
        return self.form_choice[1]

    @cached_property
    def frob(self) -> FrobeniusSystem:
        return frobenius_system(self.algebra, self.form, self._b_basis)

    @property
    def nakayama(self) -> Matrix:
        return self.frob.nakayama

    @cached_property
    def uses_grouplike_cointegral(self) -> GrouplikeCointegral | None:
        """The grouplike cointegral structure of the form in use, if it has one."""
        gc = self.grouplike_cointegral
        if gc is not None and gc.form == self.form:
            return gc
        return cointegral_grouplike_of(self, self.form)

    # derived automorphisms ------------------------------------------------
    @cached_property
    def twisted_counit(self) -> Matrix:
        """a -> alpha(S(a_(-1))) a_(0), as an m x m matrix."""
        return leg_apply(self.coaction, self.dims, left=self.hopf.alpha_bar)

    @cached_property
    def serre_twist(self) -> Matrix:
        return serre_twist(self)

    @cached_property
    def nu_tilde(self) -> Matrix:
        return nu_tilde(self)

    @cached_property
    def im_element(self) -> Matrix:
        return im_element(self)

    @cached_property
    def coefficient_elements(self) -> Matrix:
        """Columns c_i = (id (x) form) delta(a^i) in H."""
        return leg_apply(self.coaction, self.dims, right=self.form) @ self.frob.a_dual


def verify_comodule_algebra(ca: ComoduleAlgebra) -> AxiomReport:
    rep = AxiomReport("comodule algebra")
    H, A, d = ca.hopf, ca.algebra, ca.coaction
    rep.extend(verify_algebra(A))
    if not rep.ok:
        return rep
    dims = ca.dims
    rep.check("coassociativity", leg_apply(d, dims, left=H.comult) == leg_apply(d, dims, right=d))
    rep.check("counit", leg_apply(d, dims, left=H.counit) == A.identity())
    bad = [
        A.names[g] for g in A.generator_indices if not d @ A.left_ops[g] == tensor_left_apply(H.algebra, A, d.col(g), d)
    ]
    rep.check("multiplicativity", not bad, f"fails for generators {bad}")
    rep.check("unit", d @ A.unit == H.unit.kron(A.unit))
    return rep


def serre_twist(ca: ComoduleAlgebra) -> Matrix:
    """nu'(a) = alpha(S(a_(-1))) nu(a_(0))."""
    nup = ca.nakayama @ ca.twisted_counit
    if not ca.algebra.is_automorphism(nup):
        raise ConsistencyError("Serre twist is not an algebra automorphism")
    return nup


def nu_tilde(ca: ComoduleAlgebra) -> Matrix:
    """nu~(a) = alpha(S(a_(-1))) nu^2(a_(0)); asserted to equal nu o nu'."""
    nu = ca.nakayama
    nut = nu @ nu @ ca.twisted_counit
    if not ca.algebra.is_automorphism(nut):
        raise ConsistencyError("nu~ is not an algebra automorphism")
    if not nut == nu @ ca.serre_twist:
        raise ConsistencyError("nu~ differs from nu o nu'")
    return nut


def im_element(ca: ComoduleAlgebra) -> Matrix:
    """sum_ij g_H S^-3(c_j) S^-1(c_i) (x) nu(b_j b_i), as an (n*m) x 1 column."""
    H, A = ca.hopf, ca.algebra
    n, m = ca.dims
    c = ca.coefficient_elements
    left = H.algebra.left(H.grouplike) @ H.s_power(-3) @ c  # column j: g_H S^-3(c_j)
    right = H.s_power(-1) @ c  # column i: S^-1(c_i)
    h_parts = H.algebra.mult_after(left, right)  # column (j, i)
    q = ca.frob.b_basis
    a_parts = ca.nakayama @ A.mult_after(q, q)  # column (j, i): nu(b_j b_i)
    return (h_parts @ a_parts.T).reshape(n * m, 1)


def _cointegral_equations(ca: ComoduleAlgebra, g: Matrix) -> Matrix:
    # unknown form lambda_k; equation row (p, j): sum_k delta[(p,k), j] lambda_k - g_p lambda_j = 0
    n, m = ca.dims
    eqs = ca.coaction.reshape(n * m * m, 1).permute_rows((n, m, m), (0, 2, 1)).reshape(n * m, m)
    return eqs - g.kron(ca.algebra.identity())


def cointegral_grouplike_of(ca: ComoduleAlgebra, form: Matrix) -> GrouplikeCointegral | None:
    """If ``form`` is a g-cointegral for some g in H, return it (g is then unique)."""
    K = leg_apply(ca.coaction, ca.dims, right=form)
    j = next(c for _, c in form.nonzero_entries())
    g = K.col(j) / form.entry(0, j)
    if not K == g @ form or not ca.hopf.is_grouplike(g):
        return None
    return GrouplikeCointegral(g, form, gram_matrix(ca.algebra, form).is_invertible())


def grouplike_cointegral(ca: ComoduleAlgebra, candidates: Sequence[Matrix]) -> GrouplikeCointegral | None:
    """First candidate g admitting a nondegenerate g-cointegral."""
    A = ca.algebra
    for g in candidates:
        if not ca.hopf.is_grouplike(g):
            raise ValueError("grouplike candidate fails the grouplike test")
        space = Subspace.kernel(_cointegral_equations(ca, g))
        if space.dim == 0:
            continue
        forms = [v.T for v in space.vectors()]
        if space.dim == 1:
            if gram_matrix(A, forms[0]).is_invertible():
                return GrouplikeCointegral(g, forms[0], True)
            continue
        hit = invertible_in_subspace([gram_matrix(A, f) for f in forms])
        if hit.witness is not None:
            lam = forms[0] * 0
            for t, f in zip(hit.witness, forms):
                lam = lam + f * t
            return GrouplikeCointegral(g, lam, True)
    return None


def verify_im_simplification(ca: ComoduleAlgebra, gc: GrouplikeCointegral) -> bool:
    """im_element == g_A^-2 g_H (x) 1_A when the form in use is the g_A-cointegral."""
    H = ca.hopf
    if not gc.form == ca.form:
        raise ValueError("the grouplike cointegral must be the Frobenius form in use")
    ginv = is_invertible(H.algebra, gc.grouplike)
    expected = H.algebra.product(H.algebra.product(ginv, ginv), H.grouplike).kron(ca.algebra.unit)
    return ca.im_element == expected
