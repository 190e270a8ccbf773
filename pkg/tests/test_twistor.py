"""Twistor curvature: decomposition, classification equivalences, Bianchi."""

import numpy as np
import pytest

from sdual_lab import forms, sampling, twistor
from sdual_lab.twistor import TwistorTensor

ALPHAS = (-1, 1)


def _rng(alpha, salt=0):
    return np.random.default_rng(100 + salt + alpha)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_symmetry_validation(alpha):
    bad = np.zeros((4, 4, 4, 4))
    bad[0, 0, 1, 2] = 1.0
    with pytest.raises(ValueError):
        TwistorTensor(bad, alpha)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_action_is_self_adjoint(alpha):
    rng = _rng(alpha)
    for _ in range(20):
        r = sampling.random_pair_symmetric(rng, alpha)
        w = forms.vec_to_form(rng.standard_normal(6))
        phi = forms.vec_to_form(rng.standard_normal(6))
        lhs = forms.inner(twistor.act(r, w), phi, alpha)
        rhs = forms.inner(w, twistor.act(r, phi), alpha)
        assert abs(lhs - rhs) < 1e-10


@pytest.mark.parametrize("alpha", ALPHAS)
def test_operator_matrix_round_trip(alpha):
    rng = _rng(alpha, 1)
    for _ in range(20):
        r = sampling.random_pair_symmetric(rng, alpha)
        O = twistor.operator_matrix(r)
        r2 = sampling.from_operator_matrix(O, alpha)
        assert np.abs(r2.components - r.components).max() < 1e-10


@pytest.mark.parametrize("alpha", ALPHAS)
def test_pure_trace_tensor_scalar_action(alpha):
    g = forms.fibre_metric(alpha)
    k = 0.37
    pure = k * (np.einsum("bd,ge->bgde", g, g) - np.einsum("gd,be->bgde", g, g))
    r = TwistorTensor(pure, alpha)
    kappa = twistor.ricci_t(r).kappa
    assert abs(kappa + 12.0 * k) < 1e-12
    O = twistor.operator_matrix(r)
    assert np.abs(O - (kappa / 6.0) * np.eye(6)).max() < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
def test_weyl_is_trace_free_and_block_diagonal(alpha):
    rng = _rng(alpha, 2)
    g = forms.fibre_metric(alpha)
    for _ in range(20):
        r = sampling.random_pair_symmetric(rng, alpha)
        W = twistor.weyl_t(r)
        ric = np.einsum("gd,bgde->be", g, W.components)
        assert np.abs(ric).max() < 1e-10
        O = twistor.operator_matrix(W)
        assert np.abs(O[:3, 3:]).max() < 1e-10
        assert np.abs(O[3:, :3]).max() < 1e-10


@pytest.mark.parametrize("alpha", ALPHAS)
def test_einstein_iff_preserves_sd(alpha):
    rng = _rng(alpha, 3)
    for k in range(60):
        r = sampling.random_pair_symmetric(rng, alpha)
        if k % 2 == 0:
            r = sampling.make_einstein(r)
        einstein, const = twistor.is_einstein_bundle(r)
        preserves = twistor.preserves_sd_module(r)
        assert einstein == preserves
        if einstein:
            rt = twistor.ricci_t(r)
            assert abs(const - rt.kappa / 4.0) < 1e-12


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("xi", (1, -1))
def test_semiflat_construction_and_bianchi(alpha, xi):
    rng = _rng(alpha, 4)
    for _ in range(40):
        r = sampling.random_pair_symmetric(rng, alpha)
        rs = sampling.make_semiflat(r, xi)
        assert twistor.semiflat_index(rs) == xi or (
            twistor.semiflat_index(rs) is not None
        )
        Wp, Wm, _ = twistor.weyl_split(twistor.weyl_t(rs))
        gone = Wm if xi == 1 else Wp
        scale = max(1.0, np.abs(rs.components).max())
        assert np.abs(gone).max() < 1e-9 * scale
        assert twistor.bianchi_residual(rs) < 1e-9 * scale
        # the projection keeps ric and kappa
        assert (
            np.abs(
                twistor.ricci_t(rs).components - twistor.ricci_t(r).components
            ).max()
            < 1e-9
        )


@pytest.mark.parametrize("alpha", ALPHAS)
def test_generic_tensor_fails_bianchi(alpha):
    rng = _rng(alpha, 5)
    failures = 0
    for _ in range(20):
        r = sampling.random_pair_symmetric(rng, alpha)
        if twistor.bianchi_residual(r) > 1e-6:
            failures += 1
    assert failures == 20


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("xi", (1, -1))
def test_semiflat_mapping_equivalences(alpha, xi):
    rng = _rng(alpha, 6)
    for _ in range(30):
        r = sampling.random_pair_symmetric(rng, alpha)
        rs = sampling.make_semiflat(r, xi)
        checks = twistor.semiflat_mapping_checks(rs, xi)
        assert checks["kappa_equivalence_holds"]
        assert checks["ric_equivalence_holds"]
        # force kappa = 0: first equivalence flips to (true, true)
        r0 = sampling.force_kappa_zero(rs)
        checks0 = twistor.semiflat_mapping_checks(r0, xi)
        assert checks0["kappa_zero"] and checks0["maps_opposite_into_xi"]
        assert checks0["kappa_equivalence_holds"]
        if not checks0["ric_zero"]:
            assert not checks0["maps_all_into_xi"]
        # fully Ricci-flat: both equivalences with both sides true
        rf = sampling.make_ricci_flat_semiflat(r, xi)
        checksf = twistor.semiflat_mapping_checks(rf, xi)
        assert checksf["ric_zero"] and checksf["maps_all_into_xi"]


@pytest.mark.parametrize("alpha", ALPHAS)
def test_semiflat_mapping_checks_rejects_generic_input(alpha):
    rng = _rng(alpha, 7)
    r = sampling.random_pair_symmetric(rng, alpha)
    # a generic tensor has both Weyl halves nonzero
    if twistor.semiflat_index(r) is None:
        with pytest.raises(ValueError):
            twistor.semiflat_mapping_checks(r, 1)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_scalar_action_on_opposite_module(alpha):
    rng = _rng(alpha, 8)
    for _ in range(30):
        r = sampling.random_pair_symmetric(rng, alpha)
        ra = sampling.make_semiflat(r, -1)  # vanishing plus-half
        kappa = twistor.ricci_t(ra).kappa
        block = twistor.operator_matrix(ra)[:3, :3]
        assert np.abs(block - (kappa / 6.0) * np.eye(3)).max() < 1e-9
        ok, c = twistor.constant_twistor_curvature(ra)
        assert ok and abs(c - kappa / 6.0) < 1e-9


@pytest.mark.parametrize("alpha", ALPHAS)
def test_twistor_curvature_value_rejects_isotropic(alpha):
    rng = _rng(alpha, 9)
    r = sampling.random_pair_symmetric(rng, alpha)
    if alpha == 1:
        # (b_x + b_z)/... has (w, w) = -2 + 2 = 0
        bx, _, bz = forms.sd_basis(alpha)
        w = bx + bz
        assert abs(forms.inner(w, w, alpha)) < 1e-12
        with pytest.raises(ValueError):
            twistor.twistor_curvature_value(r, w)
    with pytest.raises(ValueError):
        twistor.twistor_curvature_value(r, np.zeros((4, 4)))
