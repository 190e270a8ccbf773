"""Holomorphic curvature of generalized Kaehler surfaces.

The curvature of a generalized Kaehler surface is encoded by a tensor
A^{ad}_{bc} over K_alpha, symmetric in its upper and in its lower index
pair and subject to the reality condition

    conj(A^{ad}_{bc}) = eps(a) eps(b) eps(c) eps(d) A^{bc}_{ad},

where eps(0) = 1 and eps(1) = -alpha are the diagonal entries of the
Hermitian fibre metric h = diag(1, -alpha).  The associated Ricci
endomorphism is r^a_b = -A^{ca}_{cb} with real scalar s = 2 tr r.

The module also provides the bridge to the real 4-dimensional picture:
the adapted null frame (eps_0, eps_1, eps_0hat, eps_1hat) built from a
real frame ordered (e0, J e0, e1, J e1), the assembly of the real
Riemann-type tensor from A, and the distinguished self-dual and
anti-self-dual 2-forms written in the adapted frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import sqrt

import numpy as np

from . import forms, twistor
from .forms import DEFAULT_TOL
from .karith import KTensor, check_alpha, k_einsum

VALIDITY_TOL = 1e-9


def eps_sign(a: int, alpha: int) -> int:
    """Diagonal entry of the Hermitian fibre metric: eps(0)=1, eps(1)=-alpha."""
    if a not in (0, 1):
        raise ValueError("holomorphic index must be 0 or 1")
    return 1 if a == 0 else -alpha


def _eps_vec(alpha: int) -> np.ndarray:
    return np.array([1.0, -float(alpha)])


def reality_image(T: KTensor) -> KTensor:
    """The tensor whose equality with T expresses the reality condition."""
    e = _eps_vec(T.alpha)
    w = np.einsum("a,d,b,c->adbc", e, e, e, e)
    swapped = T.conj().transpose((2, 3, 0, 1))
    return KTensor(w * swapped.re, w * swapped.im, T.alpha)


def project_valid(T: KTensor) -> KTensor:
    """Orthogonal projection onto valid holomorphic curvature tensors."""
    if T.shape != (2, 2, 2, 2):
        raise ValueError("holomorphic curvature tensor must be 2x2x2x2")
    T = 0.5 * (T + T.transpose((1, 0, 2, 3)))
    T = 0.5 * (T + T.transpose((0, 1, 3, 2)))
    return 0.5 * (T + reality_image(T))


def validity_residual(T: KTensor) -> float:
    r1 = (T - T.transpose((1, 0, 2, 3))).max_abs()
    r2 = (T - T.transpose((0, 1, 3, 2))).max_abs()
    r3 = (T - reality_image(T)).max_abs()
    return max(r1, r2, r3)


@dataclass(frozen=True)
class HoloCurvature:
    """Valid holomorphic curvature tensor; entry [a,d,b,c] is A^{ad}_{bc}."""

    tensor: KTensor

    def __post_init__(self):
        T = self.tensor
        if not isinstance(T, KTensor) or T.shape != (2, 2, 2, 2):
            raise ValueError("holomorphic curvature tensor must be a 2x2x2x2 KTensor")
        scale = max(1.0, T.max_abs())
        if validity_residual(T) > VALIDITY_TOL * scale:
            raise ValueError(
                "tensor violates the pair symmetries or the reality condition"
            )

    @property
    def alpha(self) -> int:
        return self.tensor.alpha

    @classmethod
    def zero(cls, alpha: int) -> "HoloCurvature":
        return cls(KTensor.zeros((2, 2, 2, 2), alpha))


def holo_ricci(A: HoloCurvature) -> KTensor:
    """r^a_b = -A^{ca}_{cb}; entry [a,b] is r^a_b."""
    T = A.tensor
    re = -np.einsum("cacb->ab", T.re)
    im = -np.einsum("cacb->ab", T.im)
    return KTensor(re, im, A.alpha)


def scalar_s(A: HoloCurvature) -> float:
    """s = 2 (r^0_0 + r^1_1); real for every valid tensor."""
    r = holo_ricci(A)
    return 2.0 * float(r.re[0, 0] + r.re[1, 1])


def _delta(alpha: int) -> KTensor:
    return KTensor(np.eye(2), np.zeros((2, 2)), alpha)


def sym_delta(alpha: int) -> KTensor:
    """delta-tilde^{ad}_{bc} = delta^a_b delta^d_c + delta^a_c delta^d_b."""
    d = np.eye(2)
    comp = np.einsum("ab,dc->adbc", d, d) + np.einsum("ac,db->adbc", d, d)
    return KTensor(comp, np.zeros_like(comp), alpha)


def _t_expansion(t: KTensor) -> KTensor:
    """t^b_a d^d_c + t^d_c d^b_a + t^b_c d^d_a + t^d_a d^b_c at slot [b,d,a,c]."""
    d = KTensor(np.eye(2), np.zeros((2, 2)), t.alpha)
    out = k_einsum("ba,dc->bdac", t, d)
    out = out + k_einsum("dc,ba->bdac", t, d)
    out = out + k_einsum("bc,da->bdac", t, d)
    out = out + k_einsum("da,bc->bdac", t, d)
    return out


def sd_residual(A: HoloCurvature):
    """Residual of the self-duality identity and the endomorphism t.

    Self-duality holds iff 4 A^{bd}_{ac} equals the symmetrized expansion
    of t = -r + (s/12) id.
    """
    r = holo_ricci(A)
    s = scalar_s(A)
    t = -r + (s / 12.0) * _delta(A.alpha)
    residual = (4.0 * A.tensor - _t_expansion(t)).max_abs()
    return residual, t


def is_self_dual_kaehler(A: HoloCurvature, tol: float = DEFAULT_TOL):
    """Whether the surface is self-dual; also returns the endomorphism t."""
    residual, t = sd_residual(A)
    scale = max(1.0, A.tensor.max_abs())
    return residual <= tol * scale, t


def is_anti_self_dual_kaehler(A: HoloCurvature, tol: float = DEFAULT_TOL) -> bool:
    """Anti-self-duality is equivalent to vanishing of the scalar s."""
    scale = max(1.0, A.tensor.max_abs())
    return abs(scalar_s(A)) <= tol * scale


def bochner(A: HoloCurvature) -> KTensor:
    """Bochner tensor B = A + 2 sym(L x delta) with L = r/8 - (s/96) id.

    B vanishes identically iff the surface is self-dual.
    """
    r = holo_ricci(A)
    s = scalar_s(A)
    L = 0.125 * r - (s / 96.0) * _delta(A.alpha)
    return A.tensor + _t_expansion(2.0 * L)


def weyl_unmixed(A: HoloCurvature) -> KTensor:
    """W_{ab}^{cd} at slot [a,b,c,d]; depends on A only through r and s."""
    r = holo_ricci(A)
    s = scalar_s(A)
    d = _delta(A.alpha)
    out = k_einsum("ca,db->abcd", r, d)
    out = out + k_einsum("db,ca->abcd", r, d)
    out = out - k_einsum("da,cb->abcd", r, d)
    out = out - k_einsum("cb,da->abcd", r, d)
    out = 0.5 * out
    tail = k_einsum("da,cb->abcd", d, d) - k_einsum("ca,db->abcd", d, d)
    return out + (s / 6.0) * tail


def weyl_mixed(A: HoloCurvature) -> KTensor:
    """W_a^b_c^d at slot [a,b,c,d]."""
    r = holo_ricci(A)
    s = scalar_s(A)
    d = _delta(A.alpha)
    out = -A.tensor.transpose((1, 3, 0, 2))  # A^{bd}_{ac} at slot [a,b,c,d]
    half = k_einsum("da,bc->abcd", r, d) + k_einsum("bc,da->abcd", r, d)
    out = out - 0.5 * half
    tail = k_einsum("bc,da->abcd", d, d)
    return out + (s / 6.0) * tail


# ----------------------------------------------------------------------
# Adapted frame and the bridge to the real 4-dimensional picture.
#
# Real frame order: (e0, J e0, e1, J e1), metric diag(1, -alpha, -alpha, 1).
# Adapted frame order: (eps_0, eps_1, eps_0hat, eps_1hat) with
#   eps_a    = (e_a + i alpha J e_a) / sqrt(2),
#   eps_ahat = (e_a - i alpha J e_a) / sqrt(2),
# which satisfy J eps_a = i eps_a and J eps_ahat = -i eps_ahat.  In this
# frame the metric has g_{0 0hat} = 1, g_{1 1hat} = -alpha and the volume
# form has eta_{0 1 0hat 1hat} = -alpha.
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def aframe_matrix(alpha: int) -> KTensor:
    """C[i, m]: adapted-frame vector i expanded over the real frame."""
    check_alpha(alpha)
    h = 1.0 / sqrt(2.0)
    re = np.zeros((4, 4))
    im = np.zeros((4, 4))
    re[0, 0] = h
    im[0, 1] = alpha * h
    re[1, 2] = h
    im[1, 3] = alpha * h
    re[2, 0] = h
    im[2, 1] = -alpha * h
    re[3, 2] = h
    im[3, 3] = -alpha * h
    return KTensor(re, im, alpha)


@lru_cache(maxsize=None)
def real_frame_matrix(alpha: int) -> KTensor:
    """D[m, i]: real-frame vector m expanded over the adapted frame."""
    check_alpha(alpha)
    h = 1.0 / sqrt(2.0)
    re = np.zeros((4, 4))
    im = np.zeros((4, 4))
    re[0, 0] = h
    re[0, 2] = h
    im[1, 0] = h
    im[1, 2] = -h
    re[2, 1] = h
    re[2, 3] = h
    im[3, 1] = h
    im[3, 3] = -h
    return KTensor(re, im, alpha)


def to_real_frame(T: KTensor) -> KTensor:
    """Covariant components in the real frame from adapted-frame ones."""
    return _change_frame(real_frame_matrix(T.alpha), T)


def to_adapted_frame(T: KTensor) -> KTensor:
    """Covariant components in the adapted frame from real-frame ones."""
    return _change_frame(aframe_matrix(T.alpha), T)


def _change_frame(M: KTensor, T: KTensor) -> KTensor:
    out = T
    n = len(T.shape)
    letters = [chr(ord("a") + k) for k in range(n)]
    for axis in range(n):
        src = "".join(letters)
        tgt = "".join("m" if k == axis else letters[k] for k in range(n))
        out = k_einsum(f"m{letters[axis]},{src}->{tgt}", M, out)
    return out


def _hat(i: int) -> int:
    return (i + 2) % 4


def riemann_aframe(A: HoloCurvature) -> KTensor:
    """Riemann-type tensor in the adapted frame assembled from A.

    The canonical components are R_{ahat b c dhat} = eps(a) eps(d)
    A^{ad}_{bc}; every component whose index pairs are not of mixed
    hatted/unhatted type vanishes.
    """
    T = A.tensor
    al = A.alpha
    R = KTensor.zeros((4, 4, 4, 4), al)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    v = eps_sign(a, al) * eps_sign(d, al)
                    vr = v * T.re[a, d, b, c]
                    vi = v * T.im[a, d, b, c]
                    i, j, k, m = _hat(a), b, c, _hat(d)
                    for p, q, sp in ((i, j, 1.0), (j, i, -1.0)):
                        for u, w, su in ((k, m, 1.0), (m, k, -1.0)):
                            s = sp * su
                            R.re[p, q, u, w] = s * vr
                            R.im[p, q, u, w] = s * vi
                            R.re[u, w, p, q] = s * vr
                            R.im[u, w, p, q] = s * vi
    return R


def riemann_real(A: HoloCurvature, tol: float = 1e-9) -> twistor.TwistorTensor:
    """Real-frame Riemann-type tensor of A as a twistor-type tensor.

    The reality condition on A guarantees that the transformed components
    are real; a non-negligible imaginary part signals an invalid input.
    """
    RA = riemann_aframe(A)
    RR = to_real_frame(RA)
    scale = max(1.0, RR.max_abs())
    if np.abs(RR.im).max() > tol * scale:
        raise ValueError("real-frame curvature has a non-real component")
    return twistor.TwistorTensor(RR.re, A.alpha)


def adapted_sd_form(x: float, y: float, z: float, alpha: int) -> KTensor:
    """Self-dual 2-form with coordinates (x, y, z) in the adapted frame."""
    check_alpha(alpha)
    w = KTensor.zeros((4, 4), alpha)

    def put(i, j, re, im):
        w.re[i, j] = re
        w.im[i, j] = im
        w.re[j, i] = -re
        w.im[j, i] = -im

    put(0, 1, x, z)
    put(0, 2, 0.0, y)
    put(1, 3, 0.0, -alpha * y)
    put(2, 3, x, -z)
    return w


def adapted_asd_form(x: float, y: float, z: float, alpha: int) -> KTensor:
    """Anti-self-dual 2-form with coordinates (x, y, z) in the adapted frame."""
    check_alpha(alpha)
    w = KTensor.zeros((4, 4), alpha)

    def put(i, j, re, im):
        w.re[i, j] = re
        w.im[i, j] = im
        w.re[j, i] = -re
        w.im[j, i] = -im

    put(0, 2, 0.0, y)
    put(0, 3, x, z)
    put(1, 2, -x, z)
    put(1, 3, 0.0, alpha * y)
    return w


def real_weyl_blocks(A: HoloCurvature):
    """(W+, W-) action blocks of the real-frame Weyl part of A."""
    r = riemann_real(A)
    W = twistor.weyl_t(r)
    Wp, Wm, _ = twistor.weyl_split(W)
    return Wp, Wm
