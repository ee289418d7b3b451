"""Built-in instance matrix exercising every module-category formula exactly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .algebra import is_invertible
from .comodalg import ComoduleAlgebra, verify_im_simplification
from .exactmath import Matrix
from .families import a1, named_group, regular_comodule, taft, trivial_comodule
from .hopf import HopfData, verify_radford_s4
from .report import AxiomReport
from .repmod import (
    FinModule,
    verify_alpha_beta,
    verify_coend_projection,
    verify_fnl,
    verify_fnr_and_radford,
    verify_fsl,
)
from .unimod import alternate_form, decide

__all__ = ["CheckLine", "instance_matrix", "run_selftest"]


@dataclass(frozen=True)
class CheckLine:
    context: str
    name: str
    passed: bool
    detail: str = ""

    def render(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"[{mark}] {self.context}: {self.name}{tail}"


def _hopf_instances() -> list[tuple[str, Callable[[], HopfData]]]:
    return [("kZ/2", lambda: named_group("Z2")), ("Sweedler", lambda: taft(2)), ("taft(3)", lambda: taft(3))]


def instance_matrix(H: HopfData, hname: str) -> list[tuple[str, ComoduleAlgebra]]:
    """Comodule algebras over H: trivial, regular, A1(d=1, xi=0) for Sweedler, plus a skewed-form copy of each
    instance of dimension > 1 (so that the coefficient elements are not all grouplike)."""
    base = [("trivial", trivial_comodule(H)), ("regular", regular_comodule(H))]
    if hname == "Sweedler":
        base.append(("A1(d=1, xi=0)", a1(2, 1, 0, H)))
    out = []
    for name, ca in base:
        out.append((name, ca))
        alt = alternate_form(ca)
        if alt is not None and ca.uses_grouplike_cointegral is not None:
            out.append((f"{name} [skewed form]", ca.with_form(alt)))
    return out


def _lines(context: str, report: AxiomReport) -> Iterator[CheckLine]:
    for axiom, passed, detail in report.items:
        yield CheckLine(context, f"{report.subject}: {axiom}", passed, detail)


def _alternate_b_basis(ca: ComoduleAlgebra) -> Matrix:
    q = ca.frob.b_basis
    m = q.cols
    rows = [[1 if c == r or c == r + 1 else 0 for c in range(m)] for r in range(m)]
    if m == 1:
        rows = [[2]]
    return q @ Matrix.from_rows(rows, ca.order)


def _comodule_checks(ctx: str, ca: ComoduleAlgebra, corrupt_im: bool) -> Iterator[CheckLine]:
    H, A = ca.hopf, ca.algebra
    im = ca.im_element
    if corrupt_im:
        im = im + H.unit.kron(A.unit)
    yield CheckLine(ctx, "nu~ = nu o nu'", ca.nu_tilde == ca.nakayama @ ca.serre_twist)
    other = ca.with_b_basis(_alternate_b_basis(ca))
    yield CheckLine(ctx, "Im independent of the dual bases", other.im_element == im)
    gc = ca.uses_grouplike_cointegral
    if gc is not None:
        ginv = is_invertible(H.algebra, gc.grouplike)
        expected = H.algebra.product(H.algebra.product(ginv, ginv), H.grouplike).kron(A.unit)
        ok = im == expected and (corrupt_im or verify_im_simplification(ca, gc))
        yield CheckLine(ctx, "Im = g_A^-2 g_H (x) 1 for the grouplike cointegral", ok)
    report = decide(ca)
    if "form independence" in report.cross_checks:
        yield CheckLine(ctx, "verdict independent of the Frobenius form", report.cross_checks["form independence"])
    M = FinModule.regular(A)
    yield from _lines(f"{ctx} | M=regular", verify_alpha_beta(ca, M))
    yield from _lines(f"{ctx} | M=N=regular", verify_coend_projection(ca, M, M))
    for xname, X in (("trivial", FinModule.trivial(H)), ("regular", FinModule.regular(H.algebra))):
        sub = f"{ctx} | X={xname} M=regular"
        yield from _lines(sub, verify_fnl(ca, X, M))
        yield from _lines(sub, verify_fsl(ca, X, M))


def run_selftest(corrupt_im: bool = False) -> list[CheckLine]:
    """All checks on the instance matrix, in a fixed order."""
    out: list[CheckLine] = []
    for hname, make in _hopf_instances():
        H = make()
        out.append(CheckLine(hname, "S^4 identity", verify_radford_s4(H)))
        for xname, X in (("trivial", FinModule.trivial(H)), ("regular", FinModule.regular(H.algebra))):
            out.extend(_lines(f"{hname} | X={xname}", verify_fnr_and_radford(H, X)))
        for aname, ca in instance_matrix(H, hname):
            out.extend(_comodule_checks(f"{hname} | A={aname}", ca, corrupt_im))
    return out
