"""Command-line interface.

Subcommands:

* ``analyze`` -- read a curvature document and emit an analysis report.
* ``hodge``   -- read a two_form document and emit its decomposition.
* ``verify``  -- run a named property suite on seeded random samples.
* ``models``  -- emit a named model fixture as a schema document.

Exit codes: 0 success, 1 property failure, 2 input error.  The default
tolerance is 1e-9 and may be overridden by --tol or the SDUAL_LAB_TOL
environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import forms, kaehler, models, quaternions, report, sampling, twistor
from .forms import DEFAULT_TOL
from .report import DocumentError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

SUITES = (
    "algebra",
    "hodge",
    "thm32",
    "thm34",
    "thm36_38",
    "thm43_45",
    "thm46",
    "models",
)


def _default_tol() -> float:
    env = os.environ.get("SDUAL_LAB_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise SystemExit(f"invalid SDUAL_LAB_TOL value: {env!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdual-lab",
        description="Pointwise engine for self-dual generalized geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_input=False):
        p.add_argument("--input", required=need_input, help="input document path")
        p.add_argument("--alpha", type=int, choices=(-1, 1), default=-1)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=200)
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("analyze", help="analyze a curvature document")
    common(p, need_input=True)

    p = sub.add_parser("hodge", help="decompose a two_form document")
    common(p, need_input=True)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    common(p)

    p = sub.add_parser("models", help="emit a model fixture document")
    p.add_argument("name", help="model name, alias, or name:key=value spec")
    common(p)
    return parser


def _read_document(path: str) -> report.InputDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read input: {exc}") from exc
    return report.parse_document(text)


def cmd_analyze(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    doc = _read_document(args.input)
    rep = report.analyze_document(doc, tol)
    sys.stdout.write(report.serialize_report(rep, args.format))
    return EXIT_OK


def cmd_hodge(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    doc = _read_document(args.input)
    rep = report.hodge_document(doc, tol)
    sys.stdout.write(report.serialize_report(rep, args.format))
    return EXIT_OK


def _parse_model_spec(spec: str) -> models.ModelDescriptor:
    parts = spec.split(":")
    name = parts[0]
    if name == "product":
        name = "product_surfaces"
    kw = {}
    for part in parts[1:]:
        if "=" not in part:
            raise DocumentError(f"malformed model option {part!r}")
        key, value = part.split("=", 1)
        kw[key] = value
    overrides = {}
    if "alpha" in kw:
        overrides["alpha"] = int(kw.pop("alpha"))
    if "n" in kw:
        overrides["n"] = int(kw.pop("n"))
    for pname in ("c", "lambda"):
        if pname in kw:
            overrides["parameters"] = (float(kw.pop(pname)),)
    if kw:
        raise DocumentError(f"unknown model options: {sorted(kw)}")
    try:
        return models.resolve(name, **overrides)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def cmd_models(args) -> int:
    descriptor = _parse_model_spec(args.name)
    doc = report.document_from_payload(descriptor)
    sys.stdout.write(report.serialize_document(doc))
    return EXIT_OK


# ------------------------------ verify suites --------------------------------


def _suite_algebra(rng, alpha, count, tol):
    worst = 0.0
    for _ in range(count):
        p = quaternions.GenQuaternion(*rng.standard_normal(4), alpha)
        q = quaternions.GenQuaternion(*rng.standard_normal(4), alpha)
        pq = quaternions.multiply(p, q)
        lam = quaternions.rep_first(p) @ quaternions.rep_first(q)
        mu = quaternions.rep_second(q) @ quaternions.rep_second(p)
        worst = max(worst, float(np.abs(lam - quaternions.rep_first(pq)).max()))
        worst = max(worst, float(np.abs(mu - quaternions.rep_second(pq)).max()))
    yield "representation_laws", count, worst, worst <= 1e-12


def _suite_hodge(rng, alpha, count, tol):
    worst = 0.0
    for _ in range(count):
        w = forms.vec_to_form(rng.standard_normal(6))
        ww = forms.hodge_star(forms.hodge_star(w, alpha), alpha)
        worst = max(worst, float(np.abs(ww - w).max()))
        plus = forms.sd_project(w, alpha)
        minus = forms.asd_project(w, alpha)
        worst = max(worst, float(np.abs(plus + minus - w).max()))
        worst = max(worst, abs(forms.inner(plus, minus, alpha)))
    yield "star_involution_and_splitting", count, worst, worst <= tol


def _suite_thm32(rng, alpha, count, tol):
    agree = 0
    for k in range(count):
        r = sampling.random_pair_symmetric(rng, alpha)
        if k % 3 == 1:
            r = sampling.make_einstein(r)
        einstein, _ = twistor.is_einstein_bundle(r, tol)
        preserves = twistor.preserves_sd_module(r, tol)
        agree += einstein == preserves
    yield "einstein_iff_preserves_sd", count, float(count - agree), agree == count


def _suite_thm34(rng, alpha, count, tol):
    worst = 0.0
    for k in range(count):
        r = sampling.random_pair_symmetric(rng, alpha)
        rs = sampling.make_semiflat(r, 1 if k % 2 == 0 else -1)
        worst = max(worst, twistor.bianchi_residual(rs))
    yield "semiflat_bianchi", count, worst, worst <= tol


def _suite_thm36_38(rng, alpha, count, tol):
    worst = 0.0
    agree = 0
    for k in range(count):
        r = sampling.random_pair_symmetric(rng, alpha)
        xi = 1 if k % 2 == 0 else -1
        rs = sampling.make_semiflat(r, xi)
        checks = twistor.semiflat_mapping_checks(rs, xi, tol)
        agree += checks["kappa_equivalence_holds"] and checks["ric_equivalence_holds"]
        ra = sampling.make_semiflat(r, -1)
        kappa = twistor.ricci_t(ra).kappa
        block = twistor.operator_matrix(ra)[:3, :3]
        worst = max(
            worst, float(np.abs(block - (kappa / 6.0) * np.eye(3)).max())
        )
    yield "semiflat_scalar_action", count, worst, worst <= tol
    yield "semiflat_mapping_equivalences", count, float(count - agree), agree == count


def _suite_thm43_45(rng, alpha, count, tol):
    agree = 0
    for k in range(count):
        if k % 3 == 1:
            A = sampling.random_sd_holo(rng, alpha)
        else:
            A = sampling.random_holo(rng, alpha)
        sd, _ = kaehler.is_self_dual_kaehler(A, tol)
        scale = max(1.0, A.tensor.max_abs())
        bochner_flat = kaehler.bochner(A).max_abs() <= tol * scale
        _, Wm = kaehler.real_weyl_blocks(A)
        wminus_zero = float(np.abs(Wm).max()) <= tol * scale
        agree += sd == bochner_flat == wminus_zero
    yield "sd_iff_bochner_iff_wminus", count, float(count - agree), agree == count


def _suite_thm46(rng, alpha, count, tol):
    agree = 0
    for k in range(count):
        if k % 3 == 1:
            A = sampling.random_scalar_flat_holo(rng, alpha)
        else:
            A = sampling.random_holo(rng, alpha)
        scale = max(1.0, A.tensor.max_abs())
        asd = kaehler.is_anti_self_dual_kaehler(A, tol)
        Wp, _ = kaehler.real_weyl_blocks(A)
        wplus_zero = float(np.abs(Wp).max()) <= tol * scale
        agree += asd == wplus_zero
    yield "asd_iff_s_zero_iff_wplus", count, float(count - agree), agree == count


def _suite_models(rng, alpha, count, tol):
    worst = 0.0
    ok = True
    for c in (-1.0, 0.5, 1.0):
        for n in (1, 2):
            R = models.constant_curvature_q(c, n, alpha)
            r = twistor.twistor_from_riemann(R)
            good, value = twistor.constant_twistor_curvature(r, tol)
            ok = ok and good
            worst = max(worst, abs(value - 2.0 * c))
    A = models.complex_space_form(1.0, alpha)
    worst = max(worst, abs(kaehler.scalar_s(A) + 12.0))
    worst = max(worst, kaehler.bochner(A).max_abs())
    sd, _ = kaehler.is_self_dual_kaehler(A, tol)
    ok = ok and sd
    P = models.product_surfaces(1.0, alpha)
    ok = ok and kaehler.is_anti_self_dual_kaehler(P, tol)
    psd, _ = kaehler.is_self_dual_kaehler(P, tol)
    ok = ok and psd
    Z = models.flat_holo(alpha)
    worst = max(worst, kaehler.scalar_s(Z))
    yield "model_fixtures", 8, worst, ok and worst <= tol


_SUITE_FUNCS = {
    "algebra": _suite_algebra,
    "hodge": _suite_hodge,
    "thm32": _suite_thm32,
    "thm34": _suite_thm34,
    "thm36_38": _suite_thm36_38,
    "thm43_45": _suite_thm43_45,
    "thm46": _suite_thm46,
    "models": _suite_models,
}


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    func = _SUITE_FUNCS[args.suite]
    results = []
    for alpha in (-1, 1):
        rng = np.random.default_rng(args.seed if alpha == -1 else args.seed + 1)
        for name, count, residual, passed in func(rng, alpha, args.count, tol):
            results.append(
                {
                    "property": name,
                    "alpha": alpha,
                    "count": count,
                    "max_residual": report._fmt(residual),
                    "passed": bool(passed),
                }
            )
    all_passed = all(r["passed"] for r in results)
    summary = {
        "schema_version": report.SCHEMA_VERSION,
        "suite": args.suite,
        "seed": args.seed,
        "results": results,
        "passed": all_passed,
    }
    if args.format == "json":
        sys.stdout.write(report.serialize_report(summary, "json"))
    else:
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            sys.stdout.write(
                f"{status} {args.suite}/{r['property']} alpha={r['alpha']} "
                f"count={r['count']} max_residual={r['max_residual']:.3e}\n"
            )
        sys.stdout.write(("PASS" if all_passed else "FAIL") + f" {args.suite}\n")
    return EXIT_OK if all_passed else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "hodge":
            return cmd_hodge(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "models":
            return cmd_models(args)
    except DocumentError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
