"""Hodge operator, dual splittings, and the bivector bases."""

import numpy as np
import pytest

from sdual_lab import forms, quaternions

ALPHAS = (-1, 1)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_star_squares_to_identity_on_elementary_forms(alpha):
    for i, j in forms.PAIRS:
        w = np.zeros((4, 4))
        w[i, j], w[j, i] = 1.0, -1.0
        ww = forms.hodge_star(forms.hodge_star(w, alpha), alpha)
        assert np.abs(ww - w).max() < 1e-14


@pytest.mark.parametrize("alpha", ALPHAS)
def test_star_defining_relation_via_wedge(alpha):
    # w ^ (*phi) = (w, phi) eta for all pairs of elementary forms
    rng = np.random.default_rng(3 + alpha)
    for _ in range(30):
        w = forms.vec_to_form(rng.standard_normal(6))
        phi = forms.vec_to_form(rng.standard_normal(6))
        lhs = forms.wedge_volume_coefficient(w, forms.hodge_star(phi, alpha))
        rhs = forms.inner(w, phi, alpha)
        assert abs(lhs - rhs) < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
def test_projectors_idempotent_complementary_orthogonal(alpha):
    rng = np.random.default_rng(5 + alpha)
    for _ in range(30):
        w = forms.vec_to_form(rng.standard_normal(6))
        p = forms.sd_project(w, alpha)
        m = forms.asd_project(w, alpha)
        assert np.abs(forms.sd_project(p, alpha) - p).max() < 1e-12
        assert np.abs(forms.asd_project(m, alpha) - m).max() < 1e-12
        assert np.abs(forms.sd_project(m, alpha)).max() < 1e-12
        assert np.abs(p + m - w).max() < 1e-12
        assert abs(forms.inner(p, m, alpha)) < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
def test_bases_are_eigenforms_and_span_three_dimensions(alpha):
    sd = forms.sd_basis(alpha)
    asd = forms.asd_basis(alpha)
    assert len(sd) == 3 and len(asd) == 3
    for b in sd:
        assert forms.is_self_dual(b, alpha)
    for b in asd:
        assert forms.is_anti_self_dual(b, alpha)
    M = np.column_stack([forms.form_to_vec(b) for b in sd + asd])
    assert np.linalg.matrix_rank(M) == 6


@pytest.mark.parametrize("alpha", ALPHAS)
def test_gram_matrices(alpha):
    sd = forms.sd_basis(alpha)
    asd = forms.asd_basis(alpha)
    expected = np.diag([-2.0 * alpha, -2.0 * alpha, 2.0])
    for basis in (sd, asd):
        G = np.array([[forms.inner(a, b, alpha) for b in basis] for a in basis])
        assert np.abs(G - expected).max() < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
def test_coordinates_round_trip(alpha):
    rng = np.random.default_rng(7 + alpha)
    for _ in range(20):
        x, y, z = rng.standard_normal(3)
        w = forms.from_sd_coordinates(x, y, z, alpha)
        assert np.allclose(forms.sd_coordinates(w, alpha), (x, y, z))
        assert np.abs(np.asarray(forms.asd_coordinates(w, alpha))).max() < 1e-12
        v = forms.from_asd_coordinates(x, y, z, alpha)
        assert np.allclose(forms.asd_coordinates(v, alpha), (x, y, z))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_single_component_form_coordinate(alpha):
    w = np.zeros((4, 4))
    w[0, 1], w[1, 0] = 1.0, -1.0
    x, y, z = forms.sd_coordinates(w, alpha)
    assert x == 0.5 and y == 0.0 and z == 0.0


@pytest.mark.parametrize("alpha", ALPHAS)
def test_fundamental_forms_match_dual_splitting(alpha):
    # first-kind forms of pure units are self-dual, second-kind anti-self-dual
    _, j1, j2, j3 = quaternions.basis(alpha)
    for unit in (j1, j2, j3):
        f = np.array(quaternions.fundamental_form(unit), dtype=float)
        p = np.array(quaternions.pseudofundamental_form(unit), dtype=float)
        assert forms.is_self_dual(f, alpha)
        assert forms.is_anti_self_dual(p, alpha)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_pure_quaternion_to_eigenform_bijection(alpha):
    # the three basis units map to bases of each eigenspace
    _, j1, j2, j3 = quaternions.basis(alpha)
    funds = [np.array(quaternions.fundamental_form(u), dtype=float) for u in (j1, j2, j3)]
    pseudos = [np.array(quaternions.pseudofundamental_form(u), dtype=float) for u in (j1, j2, j3)]
    Mf = np.column_stack([forms.form_to_vec(f) for f in funds])
    Mp = np.column_stack([forms.form_to_vec(p) for p in pseudos])
    assert np.linalg.matrix_rank(Mf) == 3
    assert np.linalg.matrix_rank(Mp) == 3
    sd_span = np.column_stack([forms.form_to_vec(b) for b in forms.sd_basis(alpha)])
    asd_span = np.column_stack([forms.form_to_vec(b) for b in forms.asd_basis(alpha)])
    assert np.linalg.matrix_rank(np.hstack([Mf, sd_span])) == 3
    assert np.linalg.matrix_rank(np.hstack([Mp, asd_span])) == 3


def test_check_skew_rejects_non_skew():
    with pytest.raises(ValueError):
        forms.check_skew(np.eye(4))
