"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 input error, 3 axiom failure.
Verdicts are printed as data and never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import families
from .comodalg import verify_comodule_algebra
from .exactmath import Matrix, Scalar
from .exactmath.pit import PIT_SEED
from .hopf import HopfData, verify_hopf, verify_radford_s4
from .report import AxiomReport, ConsistencyError
from .serialize import FormatError, dumps, loads, parse_scalar, scalar_to_json
from .unimod import UnimodularReport, decide, survey

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT, EXIT_AXIOM = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return loads(text)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _axiom_reports(inst) -> list[AxiomReport]:
    reports = [verify_hopf(inst.hopf)]
    if inst.comodule is not None and reports[0].ok:
        reports.append(verify_comodule_algebra(inst.comodule))
    return reports


def _functional_str(alg, f: Matrix) -> str:
    terms = [f"{alg.names[c]} -> {f.entry(0, c)}" for _, c in f.nonzero_entries()]
    return ", ".join(terms) if terms else "0"


def _character_str(alg, chi: Matrix) -> str:
    return ", ".join(f"{alg.names[g]} -> {chi.entry(0, g)}" for g in alg.generator_indices)


def _dense(m: Matrix) -> list:
    return [scalar_to_json(s) for s in m.to_list()]


# commands --------------------------------------------------------------------

def cmd_verify(args) -> int:
    inst = _read(args.file)
    reports = _axiom_reports(inst)
    ok = all(r.ok for r in reports)
    lines = [line for r in reports for line in r.lines()]
    lines.append("all axioms hold" if ok else "axiom failures: " + ", ".join(a for r in reports for a, _ in r.failures))
    _emit(args, {"ok": ok, "reports": [r.to_dict() for r in reports]}, lines)
    return EXIT_OK if ok else EXIT_AXIOM


def _validated(inst) -> int | None:
    reports = _axiom_reports(inst)
    if all(r.ok for r in reports):
        return None
    for r in reports:
        for line in r.lines():
            if line.startswith("[FAIL]"):
                print(line, file=sys.stderr)
    return EXIT_AXIOM


def _invariants(H: HopfData) -> tuple[dict, list[str]]:
    alg = H.algebra
    s4 = verify_radford_s4(H)
    payload = {
        "dim": H.dim,
        "cyclotomic_order": H.order,
        "integral": _dense(H.integral),
        "alpha": _dense(H.alpha),
        "cointegral": _dense(H.cointegral),
        "grouplike": _dense(H.grouplike),
        "unimodular": H.is_unimodular,
        "dual_unimodular": H.is_dual_unimodular,
        "s4_identity": s4,
    }
    lines = [
        f"dimension: {H.dim} over Q(zeta_{H.order})",
        f"left integral: {alg.element_str(H.integral)}",
        f"distinguished character: {_character_str(alg, H.alpha)}",
        f"right cointegral: {_functional_str(alg, H.cointegral)}",
        f"distinguished grouplike: {alg.element_str(H.grouplike)}",
        f"unimodular(H): {str(H.is_unimodular).lower()}",
        f"unimodular(H*): {str(H.is_dual_unimodular).lower()}",
        f"S^4 identity: {'holds' if s4 else 'FAILS'}",
    ]
    return payload, lines


def cmd_invariants(args) -> int:
    inst = _read(args.file)
    bad = _validated(inst)
    if bad is not None:
        return bad
    payload, lines = _invariants(inst.hopf)
    _emit(args, payload, lines)
    return EXIT_OK


def _report_lines(report: UnimodularReport, alg) -> list[str]:
    lines = [f"verdict: {report.verdict}", f"path: {report.path}"]
    lines.append(f"Frobenius form: {report.form_name} ({_functional_str(alg, report.frobenius_form)})")
    lines.append(f"dim W: {report.dim_w}")
    if report.witness is not None:
        lines.append(f"witness: {alg.element_str(report.witness)}")
    pit = report.pit
    if pit is not None and report.witness is None:
        cert = "certified" if pit.certified else f"probabilistic, error bound {pit.error_bound}"
        lines.append(f"no invertible element in W ({pit.method} search, {pit.evaluations} evaluations, {cert})")
    elif report.dim_w == 0:
        lines.append("certificate: W = 0")
    for name, ok in sorted(report.cross_checks.items()):
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    return lines


def cmd_decide(args) -> int:
    inst = _read(args.file)
    if inst.comodule is None:
        raise InputError(f"{args.file}: no comodule_algebra block")
    bad = _validated(inst)
    if bad is not None:
        return bad
    ca = inst.comodule
    if args.form == "grouplike-cointegral":
        gc = ca.grouplike_cointegral
        if gc is None or not gc.nondegenerate:
            raise InputError("no nondegenerate grouplike cointegral among the candidates")
        ca = ca.with_form(gc.form)
    elif args.form is not None:
        if args.form not in ca.forms:
            raise InputError(f"no Frobenius form named {args.form!r}; have {sorted(ca.forms)}")
        ca = ca.with_form(args.form)
    report = decide(ca, seed=args.seed)
    _emit(args, report.to_dict(), _report_lines(report, ca.algebra))
    return EXIT_OK


def _parse_xis(text: str, N: int) -> list[Scalar]:
    try:
        return [parse_scalar(t, N) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"--xi: {exc}") from exc


def cmd_survey_taft(args) -> int:
    N = args.n
    if not 2 <= N <= 6:
        raise InputError(f"--n must be in 2..6, got {N}")
    xis = _parse_xis(args.xi, N)
    rows = survey(families.taft_survey(N, xis), seed=args.seed)
    all_no = all(r.verdict == "no" for r in rows)
    width = max(len(r.label) for r in rows)
    lines = [f"Taft N={N}"]
    for r in rows:
        if r.report is None:
            lines.append(f"{r.label:<{width}}  error  {r.error}")
        else:
            lines.append(f"{r.label:<{width}}  {r.verdict:<3}  path={r.report.path}  dimW={r.report.dim_w}")
    lines.append("all negative" if all_no else "not all negative")
    payload = {
        "N": N,
        "rows": [
            {"label": r.label, "verdict": r.verdict, "error": r.error, "report": None if r.report is None else r.report.to_dict()}
            for r in rows
        ],
        "all_negative": all_no,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    checks = run_selftest(corrupt_im=args.corrupt_im)
    failed = [c for c in checks if not c.passed]
    lines = [c.render() for c in checks]
    lines.append(f"selftest: {len(checks)} checks, {len(failed)} failed")
    payload = {
        "checks": [{"context": c.context, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "failed": len(failed),
    }
    _emit(args, payload, lines)
    return EXIT_OK if not failed else EXIT_SELFTEST


def cmd_family(args) -> int:
    xi = None
    if args.kind == "a1":
        if args.xi is None or args.n is None:
            raise InputError("a1 needs --n and --xi")
        xi = _parse_xis(args.xi, args.n)[0]
    needs_n = args.kind in ("taft", "a0", "a1") or (args.kind in ("trivial", "regular") and args.base == "taft")
    if needs_n and args.n is None:
        raise InputError(f"{args.kind} needs --n")
    if args.kind in ("a0", "a1") and args.d is None:
        raise InputError(f"{args.kind} needs --d")
    if (args.kind == "group" or args.base == "group") and args.group is None:
        raise InputError("group-based instances need --group")
    spec = families.FamilySpec(args.kind, N=args.n, d=args.d, xi=xi, group=args.group, base=args.base)
    try:
        built = families.build(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    text = dumps(built) if isinstance(built, HopfData) else dumps(built.hopf, built)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# parser ----------------------------------------------------------------------

def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=_u64, default=PIT_SEED, help=f"PIT seed (default {PIT_SEED})")
    p = argparse.ArgumentParser(prog="unimodcat", description="Exact unimodularity checks for Rep(A) over Rep(H).")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="check Hopf and comodule-algebra axioms")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)
    inv = sub.add_parser("invariants", parents=[common], help="integral, character, cointegral, grouplike")
    inv.add_argument("file")
    inv.set_defaults(func=cmd_invariants)
    d = sub.add_parser("decide", parents=[common], help="decide existence of a unimodular element")
    d.add_argument("file")
    d.add_argument("--form", help="attached Frobenius form to use")
    d.set_defaults(func=cmd_decide)
    s = sub.add_parser("survey-taft", parents=[common], help="decide every A0(d), A1(d, xi) over taft(N)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--xi", default="0,1", help="comma-separated scalars, e.g. 0,1,z")
    s.set_defaults(func=cmd_survey_taft)
    st = sub.add_parser("selftest", parents=[common], help="run the built-in verification suite")
    st.add_argument("--corrupt-im", action="store_true", help="perturb Im to exercise failure reporting")
    st.set_defaults(func=cmd_selftest)
    f = sub.add_parser("family", parents=[common], help="build a family instance and write it in the file format")
    f.add_argument("kind", choices=["taft", "group", "a0", "a1", "trivial", "regular"])
    f.add_argument("--n", type=int)
    f.add_argument("--d", type=int)
    f.add_argument("--xi")
    f.add_argument("--group", help="Z<n>, klein or S3")
    f.add_argument("--base", choices=["taft", "group"], default="taft")
    f.add_argument("--emit", help="output path (default stdout)")
    f.set_defaults(func=cmd_family)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AXIOM


if __name__ == "__main__":
    sys.exit(main())
