"""Seeded random generation of twistor curvature tensors.

A generic tensor with the required pair symmetries is the pullback of a
symmetric 6x6 matrix through a bivector basis.  Constrained families
(Einstein, semiflat, scalar-flat, Ricci-flat) are produced by modifying
the 6x6 action matrix blockwise and rebuilding the rank-4 components,
which is an exact linear projection onto the constraint subspace.
"""

from __future__ import annotations

import numpy as np

from . import forms, twistor
from .twistor import TwistorTensor


def _pair_basis():
    mats = []
    for i, j in forms.PAIRS:
        m = np.zeros((4, 4))
        m[i, j] = 1.0
        m[j, i] = -1.0
        mats.append(m)
    return mats


_ELEM = _pair_basis()


def random_pair_symmetric(rng: np.random.Generator, alpha: int) -> TwistorTensor:
    """Generic tensor with required pair symmetries, unit scale."""
    S = rng.standard_normal((6, 6))
    S = 0.5 * (S + S.T)
    comp = np.zeros((4, 4, 4, 4))
    for I in range(6):
        for J in range(6):
            comp += S[I, J] * np.multiply.outer(_ELEM[I], _ELEM[J])
    return TwistorTensor(comp, alpha)


def from_operator_matrix(O: np.ndarray, alpha: int) -> TwistorTensor:
    """Tensor whose action matrix in the (sd, asd) frame is O.

    O must be self-adjoint with respect to the diagonal basis Gram, i.e.
    O[I, K] / gram[K] symmetric; the sign convention of
    ``twistor.act`` is accounted for.
    """
    bs, _, _, gram = twistor._basis6(alpha)
    S = np.empty((6, 6))
    for I in range(6):
        for K in range(6):
            S[I, K] = -0.5 * O[I, K] / gram[K]
    if np.abs(S - S.T).max() > 1e-9 * max(1.0, np.abs(S).max()):
        raise ValueError("operator matrix is not self-adjoint for this Gram")
    S = 0.5 * (S + S.T)
    comp = np.zeros((4, 4, 4, 4))
    for I in range(6):
        for K in range(6):
            comp += S[I, K] * np.multiply.outer(np.asarray(bs[I]), np.asarray(bs[K]))
    return TwistorTensor(comp, alpha)


def _modify_blocks(r: TwistorTensor, transform) -> TwistorTensor:
    O = twistor.operator_matrix(r)
    delta = transform(O.copy())
    if np.abs(delta).max() == 0.0:
        return r
    correction = from_operator_matrix(delta, r.alpha)
    return TwistorTensor(r.components - correction.components, r.alpha)


def make_einstein(r: TwistorTensor) -> TwistorTensor:
    """Project onto the Einstein family (zero mixed action blocks)."""

    def transform(O):
        delta = np.zeros((6, 6))
        delta[:3, 3:] = O[:3, 3:]
        delta[3:, :3] = O[3:, :3]
        return delta

    return _modify_blocks(r, transform)


def make_semiflat(r: TwistorTensor, xi: int) -> TwistorTensor:
    """Force W^{-xi} = 0 by removing the offending diagonal Weyl block.

    The removed piece is the opposite pure-Weyl part together with the
    volume-form part of r, which shows up as opposite traces of the two
    diagonal Weyl blocks; both must vanish for W^{-xi} = 0.  The removed
    piece is trace-free, so ric and kappa are unchanged.
    """
    W = twistor.weyl_t(r)
    OW = twistor.operator_matrix(W)
    e = np.trace(OW[:3, :3]) / 3.0
    delta = np.zeros((6, 6))
    if xi == 1:
        delta[:3, :3] = e * np.eye(3)
        delta[3:, 3:] = OW[3:, 3:]
    elif xi == -1:
        delta[:3, :3] = OW[:3, :3]
        delta[3:, 3:] = -e * np.eye(3)
    else:
        raise ValueError("xi must be +1 or -1")
    if np.abs(delta).max() == 0.0:
        return r
    correction = from_operator_matrix(delta, r.alpha)
    return TwistorTensor(r.components - correction.components, r.alpha)


def force_kappa_zero(r: TwistorTensor) -> TwistorTensor:
    """Remove the pure-trace part carrying kappa (Weyl part unchanged)."""
    g = forms.fibre_metric(r.alpha)
    kappa = twistor.ricci_t(r).kappa
    k = -kappa / 12.0
    pure = k * (np.einsum("bd,ge->bgde", g, g) - np.einsum("gd,be->bgde", g, g))
    return TwistorTensor(r.components - pure, r.alpha)


def make_ricci_flat_semiflat(r: TwistorTensor, xi: int) -> TwistorTensor:
    """Pure W^{xi} tensor: Ricci-flat and W^{-xi} = 0."""
    O = twistor.operator_matrix(r)
    block = O[:3, :3] if xi == 1 else O[3:, 3:]
    block = block - (np.trace(block) / 3.0) * np.eye(3)
    out = np.zeros((6, 6))
    if xi == 1:
        out[:3, :3] = block
    else:
        out[3:, 3:] = block
    return from_operator_matrix(out, r.alpha)


def random_holo(rng: np.random.Generator, alpha: int):
    """Random valid holomorphic curvature tensor (unit scale)."""
    from . import kaehler
    from .karith import KTensor

    re = rng.standard_normal((2, 2, 2, 2))
    im = rng.standard_normal((2, 2, 2, 2))
    A = KTensor(re, im, alpha)
    A = kaehler.project_valid(A)
    return kaehler.HoloCurvature(A)


def random_sd_holo(rng: np.random.Generator, alpha: int):
    """Random self-dual holomorphic curvature tensor.

    Built from a random endomorphism t subject to the reality condition
    conj(t^a_b) = eps(a) eps(b) t^b_a through the quarter expansion that
    characterizes self-duality.
    """
    from . import kaehler
    from .karith import KTensor

    t = KTensor(rng.standard_normal((2, 2)), rng.standard_normal((2, 2)), alpha)
    t.im[0, 0] = 0.0
    t.im[1, 1] = 0.0
    t.re[1, 0] = -alpha * t.re[0, 1]
    t.im[1, 0] = alpha * t.im[0, 1]
    expansion = kaehler._t_expansion(t)
    A = 0.25 * expansion.transpose((0, 1, 2, 3))
    # slot order of the expansion is [b, d, a, c] = [upper1, upper2, lower1, lower2]
    return kaehler.HoloCurvature(kaehler.project_valid(A))


def random_scalar_flat_holo(rng: np.random.Generator, alpha: int):
    """Random valid holomorphic curvature tensor with s = 0."""
    from . import kaehler

    A = random_holo(rng, alpha)
    c = -kaehler.scalar_s(A) / 12.0
    T = A.tensor - c * kaehler.sym_delta(alpha)
    return kaehler.HoloCurvature(T)


def complex_space_form_holo(c: float, alpha: int):
    """A = c * delta-tilde: the constant-holomorphic-sectional family."""
    from . import kaehler

    return kaehler.HoloCurvature(c * kaehler.sym_delta(alpha))
