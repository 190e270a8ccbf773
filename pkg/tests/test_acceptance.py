"""End-to-end acceptance suite.

Each test covers one acceptance criterion and prints a single PASS/FAIL
line; tolerances are the stated ones (1e-12 for exact-float algebra,
1e-9 elsewhere).
"""

import subprocess
import sys
from fractions import Fraction

import numpy as np

from sdual_lab import (
    calibration,
    forms,
    kaehler,
    models,
    quaternions,
    report,
    sampling,
    twistor,
)

ALPHAS = (-1, 1)


def _report(label: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {label}: {status}{suffix}")
    assert passed, f"{label}{suffix}"


def test_01_representation_laws():
    worst = 0.0
    for alpha in ALPHAS:
        rng = np.random.default_rng(1000 + alpha)
        for _ in range(1000):
            p = quaternions.GenQuaternion(*rng.standard_normal(4), alpha)
            q = quaternions.GenQuaternion(*rng.standard_normal(4), alpha)
            pq = quaternions.multiply(p, q)
            worst = max(
                worst,
                float(
                    np.abs(
                        quaternions.rep_first(p) @ quaternions.rep_first(q)
                        - quaternions.rep_first(pq)
                    ).max()
                ),
                float(
                    np.abs(
                        quaternions.rep_second(q) @ quaternions.rep_second(p)
                        - quaternions.rep_second(pq)
                    ).max()
                ),
            )
        # exact rational mode on a subsample
        for _ in range(100):
            coeffs = [
                [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7))) for _ in range(4)]
                for _ in range(2)
            ]
            p = quaternions.GenQuaternion(*coeffs[0], alpha)
            q = quaternions.GenQuaternion(*coeffs[1], alpha)
            pq = quaternions.multiply(p, q)
            assert (
                quaternions.rep_first(p) @ quaternions.rep_first(q)
                == quaternions.rep_first(pq)
            ).all()
            assert (
                quaternions.rep_second(q) @ quaternions.rep_second(p)
                == quaternions.rep_second(pq)
            ).all()
    _report("01 representation-laws", worst <= 1e-12, f"max residual {worst:.2e}")


def test_02_hodge_involution_and_splitting():
    ok = True
    for alpha in ALPHAS:
        for i, j in forms.PAIRS:
            w = np.zeros((4, 4))
            w[i, j], w[j, i] = 1.0, -1.0
            ok &= (
                np.abs(forms.hodge_star(forms.hodge_star(w, alpha), alpha) - w).max()
                < 1e-12
            )
        rng = np.random.default_rng(2000 + alpha)
        for _ in range(100):
            w = forms.vec_to_form(rng.standard_normal(6))
            p = forms.sd_project(w, alpha)
            m = forms.asd_project(w, alpha)
            ok &= np.abs(forms.sd_project(p, alpha) - p).max() < 1e-12
            ok &= np.abs(p + m - w).max() < 1e-12
            ok &= abs(forms.inner(p, m, alpha)) < 1e-12
        sd = np.column_stack([forms.form_to_vec(b) for b in forms.sd_basis(alpha)])
        asd = np.column_stack([forms.form_to_vec(b) for b in forms.asd_basis(alpha)])
        ok &= np.linalg.matrix_rank(sd) == 3 and np.linalg.matrix_rank(asd) == 3
    _report("02 hodge-involution-splitting", bool(ok))


def test_03_eigenform_correspondence():
    ok = True
    for alpha in ALPHAS:
        _, j1, j2, j3 = quaternions.basis(alpha)
        funds = [
            np.array(quaternions.fundamental_form(u), dtype=float)
            for u in (j1, j2, j3)
        ]
        pseudos = [
            np.array(quaternions.pseudofundamental_form(u), dtype=float)
            for u in (j1, j2, j3)
        ]
        for f in funds:
            ok &= forms.is_self_dual(f, alpha)
        for p in pseudos:
            ok &= forms.is_anti_self_dual(p, alpha)
        ok &= (
            np.linalg.matrix_rank(np.column_stack([forms.form_to_vec(f) for f in funds]))
            == 3
        )
        ok &= (
            np.linalg.matrix_rank(
                np.column_stack([forms.form_to_vec(p) for p in pseudos])
            )
            == 3
        )
    _report("03 eigenform-bijections", bool(ok))


def test_04_einstein_equivalence():
    disagreements = 0
    for alpha in ALPHAS:
        rng = np.random.default_rng(4000 + alpha)
        for k in range(1000):
            r = sampling.random_pair_symmetric(rng, alpha)
            if k % 3 == 1:
                r = sampling.make_einstein(r)
            einstein, _ = twistor.is_einstein_bundle(r, 1e-9)
            preserves = twistor.preserves_sd_module(r, 1e-9)
            disagreements += einstein != preserves
    _report(
        "04 einstein-iff-preserves-sd",
        disagreements == 0,
        f"{disagreements} disagreements / 2000",
    )


def test_05_semiflat_bianchi():
    worst = 0.0
    for alpha in ALPHAS:
        rng = np.random.default_rng(5000 + alpha)
        for xi in (1, -1):
            for _ in range(500):
                r = sampling.random_pair_symmetric(rng, alpha)
                rs = sampling.make_semiflat(r, xi)
                worst = max(worst, twistor.bianchi_residual(rs))
    _report("05 semiflat-bianchi", worst <= 1e-9, f"max residual {worst:.2e}")


def test_06_semiflat_scalar_action_and_mapping_equivalences():
    sigma = calibration.sigma_oracle()
    worst = 0.0
    disagreements = 0
    for alpha in ALPHAS:
        rng = np.random.default_rng(6000 + alpha)
        for k in range(500):
            r = sampling.random_pair_symmetric(rng, alpha)
            ra = sampling.make_semiflat(r, -1)
            kappa = twistor.ricci_t(ra).kappa
            block = twistor.operator_matrix(ra)[:3, :3]
            worst = max(
                worst,
                float(np.abs(block - (sigma * kappa / 6.0) * np.eye(3)).max()),
            )
            xi = 1 if k % 2 == 0 else -1
            rs = sampling.make_semiflat(r, xi)
            checks = twistor.semiflat_mapping_checks(rs, xi, 1e-9)
            disagreements += not checks["kappa_equivalence_holds"]
            disagreements += not checks["ric_equivalence_holds"]
            r0 = sampling.force_kappa_zero(rs)
            checks0 = twistor.semiflat_mapping_checks(r0, xi, 1e-9)
            disagreements += not (
                checks0["kappa_zero"] and checks0["maps_opposite_into_xi"]
            )
            rf = sampling.make_ricci_flat_semiflat(r, xi)
            checksf = twistor.semiflat_mapping_checks(rf, xi, 1e-9)
            disagreements += not (
                checksf["ric_zero"] and checksf["maps_all_into_xi"]
            )
    passed = worst <= 1e-9 and disagreements == 0
    _report(
        "06 semiflat-scalar-and-mapping",
        passed,
        f"sigma={sigma}, max residual {worst:.2e}, {disagreements} disagreements",
    )


def test_07_complex_space_form_fixture():
    ok = True
    for alpha in ALPHAS:
        for c in (-1.0, 0.5, 1.0):
            A = models.complex_space_form(c, alpha)
            ok &= kaehler.scalar_s(A) == -12.0 * c
            d = np.eye(2)
            Wu = kaehler.weyl_unmixed(A)
            expected = -c * (
                np.einsum("ca,db->abcd", d, d) - np.einsum("da,cb->abcd", d, d)
            )
            ok &= np.abs(Wu.re - expected).max() == 0.0
            ok &= np.abs(Wu.im).max() == 0.0
            sd, _ = kaehler.is_self_dual_kaehler(A)
            ok &= sd
            ok &= kaehler.bochner(A).max_abs() == 0.0
    _report("07 complex-space-form-fixture", bool(ok))


def test_08_self_dual_triple_equivalence():
    epsilon_l = calibration.epsilon_l_oracle()
    disagreements = 0
    for alpha in ALPHAS:
        rng = np.random.default_rng(8000 + alpha)
        for k in range(1000):
            if k % 3 == 1:
                A = sampling.random_sd_holo(rng, alpha)
            else:
                A = sampling.random_holo(rng, alpha)
            scale = max(1.0, A.tensor.max_abs())
            sd, _ = kaehler.is_self_dual_kaehler(A, 1e-9)
            bochner_flat = kaehler.bochner(A).max_abs() <= 1e-9 * scale
            _, Wm = kaehler.real_weyl_blocks(A)
            wminus_zero = float(np.abs(Wm).max()) <= 1e-8 * scale
            disagreements += not (sd == bochner_flat == wminus_zero)
    passed = disagreements == 0 and epsilon_l == -1
    _report(
        "08 self-dual-triple-equivalence",
        passed,
        f"epsilon_l={epsilon_l}, {disagreements} disagreements / 2000",
    )


def test_09_anti_self_dual_equivalence():
    disagreements = 0
    for alpha in ALPHAS:
        rng = np.random.default_rng(9000 + alpha)
        for k in range(1000):
            if k % 3 == 1:
                A = sampling.random_scalar_flat_holo(rng, alpha)
            else:
                A = sampling.random_holo(rng, alpha)
            scale = max(1.0, A.tensor.max_abs())
            asd = kaehler.is_anti_self_dual_kaehler(A, 1e-9)
            Wp, _ = kaehler.real_weyl_blocks(A)
            wplus_zero = float(np.abs(Wp).max()) <= 1e-8 * scale
            disagreements += asd != wplus_zero
    _report(
        "09 anti-self-dual-equivalence",
        disagreements == 0,
        f"{disagreements} disagreements / 2000",
    )


def test_10_model_twistor_curvatures():
    worst = 0.0
    ok = True
    for alpha in ALPHAS:
        for c in (-1.0, 0.5, 1.0):
            for n in (1, 2):
                r = twistor.twistor_from_riemann(
                    models.constant_curvature_q(c, n, alpha)
                )
                good, value = twistor.constant_twistor_curvature(r, 1e-9)
                ok &= good
                worst = max(worst, abs(value - 2.0 * c))
                s_implied = -alpha * 4.0 * (n + 2) * (2.0 * c)
                cross = models.quaternionic_kaehler_constant(r, n, s_implied)
                worst = max(worst, abs(cross - 2.0 * c))
        r0 = twistor.twistor_from_riemann(models.constant_curvature_q(0.0, 1, alpha))
        ok &= np.abs(r0.components).max() == 0.0
        ok &= twistor.ricci_t(r0).kappa == 0.0
    passed = ok and worst <= 1e-9
    _report("10 model-twistor-curvatures", bool(passed), f"max error {worst:.2e}")


def test_11_cli_determinism_and_round_trip(tmp_path):
    def run(*argv):
        return subprocess.run(
            [sys.executable, "-m", "sdual_lab.cli", *argv],
            capture_output=True,
            text=True,
        )

    ok = True
    # byte-identical reports for identical (input, seed)
    doc = report.document_from_payload(models.resolve("CP2"))
    path = tmp_path / "cp2.json"
    path.write_text(report.serialize_document(doc))
    r1 = run("analyze", "--input", str(path), "--seed", "7")
    r2 = run("analyze", "--input", str(path), "--seed", "7")
    ok &= r1.returncode == 0 and r1.stdout == r2.stdout
    v1 = run("verify", "models", "--seed", "7", "--count", "20")
    v2 = run("verify", "models", "--seed", "7", "--count", "20")
    ok &= v1.returncode == 0 and v1.stdout == v2.stdout
    # round-trip identity over the fixture catalog
    rng = np.random.default_rng(11)
    docs = [
        report.document_from_payload(models.resolve(name))
        for name in ("CP2", "CH2", "C2", "double_plane", "null_pairs")
    ]
    for alpha in ALPHAS:
        docs.append(report.document_from_payload(sampling.random_pair_symmetric(rng, alpha)))
        docs.append(report.document_from_payload(sampling.random_holo(rng, alpha)))
        docs.append(
            report.document_from_payload(
                forms.vec_to_form(rng.standard_normal(6)), alpha=alpha
            )
        )
    for d in docs:
        text = report.serialize_document(d)
        ok &= report.serialize_document(report.parse_document(text)) == text
    _report("11 cli-determinism-round-trip", bool(ok))
