"""Twistor curvature tensor on the vertical fibre and its decomposition.

A twistor curvature tensor r_{bgde} is antisymmetric in each index pair
and symmetric under pair exchange.  It acts on vertical 2-forms by

    act(r, w)_{bg} = -r_{bgde} w^{de}

(the sign and full contraction follow the identity
<R(Omega), Omega> = n (r(w), w) used throughout the source derivations;
with this convention a tensor of constant curvature c has twistor
curvature 2c and semiflat tensors act on the opposite module as
(kappa/6) id).  The Ricci trace is ric_{be} = g^{gd} r_{bgde} with
t-scalar kappa = g^{be} ric_{be}, and the Weyl part is the trace-free
remainder, block-diagonal in the (self-dual, anti-self-dual) splitting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import forms
from .forms import DEFAULT_TOL
from .karith import check_alpha

SYMMETRY_TOL = 1e-9


def check_pair_symmetries(components: np.ndarray, tol: float = SYMMETRY_TOL) -> np.ndarray:
    """Validate pair antisymmetries and pair-exchange symmetry."""
    r = np.asarray(components, dtype=float)
    if r.shape != (4, 4, 4, 4):
        raise ValueError(f"twistor tensor must be 4x4x4x4, got {r.shape}")
    scale = max(1.0, np.abs(r).max())
    if np.abs(r + r.transpose(1, 0, 2, 3)).max() > tol * scale:
        raise ValueError("tensor is not antisymmetric in the first index pair")
    if np.abs(r + r.transpose(0, 1, 3, 2)).max() > tol * scale:
        raise ValueError("tensor is not antisymmetric in the second index pair")
    if np.abs(r - r.transpose(2, 3, 0, 1)).max() > tol * scale:
        raise ValueError("tensor is not symmetric under pair exchange")
    return r


@dataclass(frozen=True)
class TwistorTensor:
    """Rank-4 tensor r_{bgde} with the pair symmetries above."""

    components: np.ndarray
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "components", check_pair_symmetries(self.components))

    @classmethod
    def zero(cls, alpha: int) -> "TwistorTensor":
        return cls(np.zeros((4, 4, 4, 4)), alpha)


@dataclass(frozen=True)
class RicciT:
    """Ricci trace of a twistor tensor and its t-scalar."""

    components: np.ndarray
    kappa: float


@dataclass(frozen=True)
class HermitianBlockRiemann:
    """Riemann tensor over composite indices (beta, b) with block metric
    G_{(beta b)(gamma c)} = g_{beta gamma} G_{bc}."""

    n: int
    components: np.ndarray
    base_metric: np.ndarray
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        n = int(self.n)
        if n < 1:
            raise ValueError("n must be a positive integer")
        object.__setattr__(self, "n", n)
        R = np.asarray(self.components, dtype=float)
        if R.shape != (4, n, 4, n, 4, n, 4, n):
            raise ValueError(f"components must have shape (4,n)*4 with n={n}")
        G = np.asarray(self.base_metric, dtype=float)
        if G.shape != (n, n) or np.abs(G - G.T).max() > 1e-12:
            raise ValueError("base metric must be a symmetric n x n matrix")
        scale = max(1.0, np.abs(R).max())
        flat = R.reshape(4 * n, 4 * n, 4 * n, 4 * n)
        if (
            np.abs(flat + flat.transpose(1, 0, 2, 3)).max() > SYMMETRY_TOL * scale
            or np.abs(flat + flat.transpose(0, 1, 3, 2)).max() > SYMMETRY_TOL * scale
            or np.abs(flat - flat.transpose(2, 3, 0, 1)).max() > SYMMETRY_TOL * scale
        ):
            raise ValueError("block Riemann tensor violates pair symmetries")
        object.__setattr__(self, "components", R)
        object.__setattr__(self, "base_metric", G)


def twistor_from_riemann(R: HermitianBlockRiemann) -> TwistorTensor:
    """r_{bgde} = (1/n) G^{bc} G^{dh} R_{b b g c d d e h}."""
    try:
        Ginv = np.linalg.inv(R.base_metric)
    except np.linalg.LinAlgError as exc:
        raise ValueError("base metric is singular") from exc
    comp = np.einsum("bc,dh,ubvcwdxh->uvwx", Ginv, Ginv, R.components) / R.n
    return TwistorTensor(comp, R.alpha)


def act(r: TwistorTensor, w: np.ndarray) -> np.ndarray:
    """(r.w)_{bg} = -r_{bgde} w^{de}."""
    wu = forms.raise_indices(w, r.alpha)
    return -np.einsum("bgde,de->bg", r.components, wu)


def ricci_t(r: TwistorTensor) -> RicciT:
    g = forms.fibre_metric(r.alpha)
    ric = np.einsum("gd,bgde->be", g, r.components)
    kappa = float(np.einsum("be,be->", g, ric))
    return RicciT(ric, kappa)


def weyl_t(r: TwistorTensor) -> TwistorTensor:
    """Trace-free part of r (the Weyl endomorphism)."""
    g = forms.fibre_metric(r.alpha)
    rt = ricci_t(r)
    ric, kappa = rt.components, rt.kappa
    corr = 0.5 * (
        np.einsum("bd,ge->bgde", ric, g)
        + np.einsum("ge,bd->bgde", ric, g)
        - np.einsum("be,gd->bgde", ric, g)
        - np.einsum("gd,be->bgde", ric, g)
    )
    trace = (kappa / 6.0) * (
        np.einsum("gd,be->bgde", g, g) - np.einsum("bd,ge->bgde", g, g)
    )
    return TwistorTensor(r.components + corr + trace, r.alpha)


@lru_cache(maxsize=None)
def _basis6(alpha: int):
    """Combined (sd, asd) basis, its component matrix and diagonal Gram."""
    bs = list(forms.sd_basis(alpha)) + list(forms.asd_basis(alpha))
    M = np.column_stack([forms.form_to_vec(b) for b in bs])
    Minv = np.linalg.inv(M)
    gram = np.array([forms.inner(b, b, alpha) for b in bs])
    return tuple(bs), M, Minv, gram


def operator_matrix(r: TwistorTensor) -> np.ndarray:
    """6x6 matrix of act(r, .) in the (sd_basis, asd_basis) frame."""
    bs, _, Minv, _ = _basis6(r.alpha)
    cols = [Minv @ forms.form_to_vec(act(r, b)) for b in bs]
    return np.column_stack(cols)


def weyl_split(W: TwistorTensor, tol: float = DEFAULT_TOL):
    """Blocks (Wplus, Wminus, Wmixed) of the Weyl action.

    Wmixed is the larger-in-magnitude of the two off-diagonal blocks of
    the 6x6 action matrix; both vanish for a valid Weyl tensor.
    """
    O = operator_matrix(W)
    Wplus = O[:3, :3]
    Wminus = O[3:, 3:]
    lower, upper = O[3:, :3], O[:3, 3:]
    Wmixed = lower if np.abs(lower).max() >= np.abs(upper).max() else upper
    return Wplus, Wminus, Wmixed


def einstein_residual(r: TwistorTensor) -> float:
    rt = ricci_t(r)
    g = forms.fibre_metric(r.alpha)
    return float(np.abs(rt.components - (rt.kappa / 4.0) * g).max())


def is_einstein_bundle(r: TwistorTensor, tol: float = DEFAULT_TOL):
    """True iff ric is proportional to g; returns the constant kappa/4."""
    rt = ricci_t(r)
    return einstein_residual(r) <= tol, rt.kappa / 4.0


def sd_invariance_residual(r: TwistorTensor) -> float:
    res = 0.0
    for b in forms.sd_basis(r.alpha):
        res = max(res, float(np.abs(forms.asd_project(act(r, b), r.alpha)).max()))
    return res


def preserves_sd_module(r: TwistorTensor, tol: float = DEFAULT_TOL) -> bool:
    """True iff act(r, .) maps self-dual forms to self-dual forms."""
    return sd_invariance_residual(r) <= tol


def bianchi_residual(r: TwistorTensor) -> float:
    """Max-norm of the first-Bianchi cyclic sum r_{b[gde]}."""
    c = r.components
    cyc = c + c.transpose(0, 2, 3, 1) + c.transpose(0, 3, 1, 2)
    return float(np.abs(cyc).max())


def twistor_curvature_value(r: TwistorTensor, w: np.ndarray) -> float:
    """k = (act(r, w), w) / (w, w) for non-isotropic w."""
    denom = forms.inner(w, w, r.alpha)
    if abs(denom) < 1e-14 * max(1.0, float(np.abs(w).max()) ** 2):
        raise ValueError("direction form is isotropic: (w, w) = 0")
    return forms.inner(act(r, w), w, r.alpha) / denom


def constant_twistor_curvature(r: TwistorTensor, tol: float = DEFAULT_TOL):
    """Test whether sd_project(act(r, .)) is scalar on the self-dual module."""
    O = operator_matrix(r)
    block = O[:3, :3]
    c = float(np.trace(block)) / 3.0
    residual = float(np.abs(block - c * np.eye(3)).max())
    return residual <= tol, c


def semiflat_index(r: TwistorTensor, tol: float = DEFAULT_TOL):
    """Self-duality index: +1 if W- = 0, -1 if W+ = 0, else None."""
    Wp, Wm, _ = weyl_split(weyl_t(r), tol)
    scale = max(1.0, np.abs(r.components).max())
    plus_zero = np.abs(Wp).max() <= tol * scale
    minus_zero = np.abs(Wm).max() <= tol * scale
    if minus_zero:
        return 1
    if plus_zero:
        return -1
    return None


def semiflat_mapping_checks(r: TwistorTensor, xi: int, tol: float = DEFAULT_TOL) -> dict:
    """Mapping criteria for a xi-semiflat tensor (W^{-xi} = 0).

    Reports the two equivalences: r maps the opposite module into
    Lambda^xi iff kappa = 0, and r maps every vertical 2-form into
    Lambda^xi iff ric = 0.
    """
    if xi not in (-1, 1):
        raise ValueError("xi must be +1 or -1")
    W = weyl_t(r)
    Wp, Wm, _ = weyl_split(W, tol)
    gone = Wm if xi == 1 else Wp
    scale = max(1.0, np.abs(r.components).max())
    if np.abs(gone).max() > tol * scale:
        raise ValueError("input tensor is not semiflat for the requested index")

    rt = ricci_t(r)
    g = forms.fibre_metric(r.alpha)
    same = forms.sd_basis(r.alpha) if xi == 1 else forms.asd_basis(r.alpha)
    opposite = forms.asd_basis(r.alpha) if xi == 1 else forms.sd_basis(r.alpha)

    def off_component(w):
        proj = forms.asd_project if xi == 1 else forms.sd_project
        return float(np.abs(proj(act(r, w), r.alpha)).max())

    opp_res = max(off_component(b) for b in opposite)
    all_res = max(opp_res, max(off_component(b) for b in same))
    kappa_zero = abs(rt.kappa) <= tol
    ric_zero = float(np.abs(rt.components).max()) <= tol
    maps_opposite = opp_res <= tol
    maps_all = all_res <= tol
    return {
        "xi": xi,
        "kappa": rt.kappa,
        "kappa_zero": kappa_zero,
        "maps_opposite_into_xi": maps_opposite,
        "kappa_equivalence_holds": kappa_zero == maps_opposite,
        "ric_max": float(np.abs(rt.components).max()),
        "ric_zero": ric_zero,
        "maps_all_into_xi": maps_all,
        "ric_equivalence_holds": ric_zero == maps_all,
        "opposite_residual": opp_res,
        "all_residual": all_res,
    }
