"""Vertical 2-forms on the 4-dimensional fibre with metric diag(1, -a, -a, 1).

The Hodge operator is defined through the volume form eta with
eta_{0123} = 1 by (*w)_{bg} = 1/2 eta_{bgmn} g^{md} g^{ne} w_{de}.
Its +-1 eigenspaces are the 3-dimensional spaces of self-dual and
anti-self-dual forms.  The canonical bases are obtained by applying the
eigenprojections P+- = (id +- *)/2 to elementary forms and normalizing
so that the self-dual coordinates are

    x = (w01 - a*w23)/2,  y = (w02 + a*w13)/2,  z = (w03 + w12)/2.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .karith import check_alpha

DEFAULT_TOL = 1e-9

# index pairs enumerating the 6 independent components of a 2-form
PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def fibre_metric(alpha: int) -> np.ndarray:
    """diag(1, -alpha, -alpha, 1); equal to its own inverse."""
    alpha = check_alpha(alpha)
    return np.diag([1.0, -alpha, -alpha, 1.0])


@lru_cache(maxsize=None)
def _levi_civita() -> np.ndarray:
    eta = np.zeros((4, 4, 4, 4))
    from itertools import permutations

    for perm in permutations(range(4)):
        sign = 1
        p = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if p[i] > p[j]:
                    sign = -sign
        eta[perm] = sign
    return eta


def volume_form(alpha: int) -> np.ndarray:
    """Totally antisymmetric eta with eta_{0123} = sqrt(det g) = 1."""
    check_alpha(alpha)
    return _levi_civita().copy()


def check_skew(w: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != (4, 4):
        raise ValueError(f"two-form must be 4x4, got {w.shape}")
    if np.abs(w + w.T).max() > tol:
        raise ValueError("two-form is not skew-symmetric")
    return w


def raise_indices(w: np.ndarray, alpha: int) -> np.ndarray:
    g = fibre_metric(alpha)
    return g @ np.asarray(w, dtype=float) @ g


def inner(w: np.ndarray, phi: np.ndarray, alpha: int) -> float:
    """(w, phi) = 1/2 w_{bg} phi^{bg}."""
    return 0.5 * float(np.sum(np.asarray(w) * raise_indices(phi, alpha)))


def hodge_star(w: np.ndarray, alpha: int) -> np.ndarray:
    """(*w)_{bg} = 1/2 eta_{bgmn} g^{md} g^{ne} w_{de}."""
    wu = raise_indices(w, alpha)
    return 0.5 * np.einsum("bgmn,mn->bg", _levi_civita(), wu)


def wedge_volume_coefficient(w: np.ndarray, phi: np.ndarray) -> float:
    """Coefficient of w ^ phi relative to eta (as 4-forms)."""
    return 0.25 * float(np.einsum("ijkm,ij,km->", _levi_civita(), w, phi))


def sd_project(w: np.ndarray, alpha: int) -> np.ndarray:
    return 0.5 * (np.asarray(w, dtype=float) + hodge_star(w, alpha))


def asd_project(w: np.ndarray, alpha: int) -> np.ndarray:
    return 0.5 * (np.asarray(w, dtype=float) - hodge_star(w, alpha))


def _elementary(i: int, j: int) -> np.ndarray:
    e = np.zeros((4, 4))
    e[i, j] = 1.0
    e[j, i] = -1.0
    return e


@lru_cache(maxsize=None)
def sd_basis(alpha: int):
    """Three +1 eigenforms of * labeled by the coordinates (x, y, z)."""
    check_alpha(alpha)
    seeds = [(0, 1), (0, 2), (0, 3)]
    out = []
    for i, j in seeds:
        b = 2.0 * sd_project(_elementary(i, j), alpha)
        out.append(b)
    return tuple(out)


@lru_cache(maxsize=None)
def asd_basis(alpha: int):
    """Three -1 eigenforms of * labeled by the mirrored coordinates."""
    check_alpha(alpha)
    seeds = [(0, 1), (0, 2), (0, 3)]
    out = []
    for i, j in seeds:
        b = 2.0 * asd_project(_elementary(i, j), alpha)
        out.append(b)
    return tuple(out)


def sd_coordinates(w: np.ndarray, alpha: int):
    """(x, y, z) of the self-dual part of w."""
    w = np.asarray(w, dtype=float)
    x = 0.5 * (w[0, 1] - alpha * w[2, 3])
    y = 0.5 * (w[0, 2] + alpha * w[1, 3])
    z = 0.5 * (w[0, 3] + w[1, 2])
    return x, y, z


def asd_coordinates(w: np.ndarray, alpha: int):
    """(x, y, z) of the anti-self-dual part of w."""
    w = np.asarray(w, dtype=float)
    x = 0.5 * (w[0, 1] + alpha * w[2, 3])
    y = 0.5 * (w[0, 2] - alpha * w[1, 3])
    z = 0.5 * (w[0, 3] - w[1, 2])
    return x, y, z


def from_sd_coordinates(x: float, y: float, z: float, alpha: int) -> np.ndarray:
    bx, by, bz = sd_basis(alpha)
    return x * bx + y * by + z * bz


def from_asd_coordinates(x: float, y: float, z: float, alpha: int) -> np.ndarray:
    bx, by, bz = asd_basis(alpha)
    return x * bx + y * by + z * bz


def is_self_dual(w: np.ndarray, alpha: int, tol: float = DEFAULT_TOL) -> bool:
    return float(np.abs(hodge_star(w, alpha) - w).max()) <= tol


def is_anti_self_dual(w: np.ndarray, alpha: int, tol: float = DEFAULT_TOL) -> bool:
    return float(np.abs(hodge_star(w, alpha) + w).max()) <= tol


@lru_cache(maxsize=None)
def star_matrix(alpha: int) -> np.ndarray:
    """Matrix of * on the 6 elementary components (pair order PAIRS)."""
    m = np.zeros((6, 6))
    for k, (i, j) in enumerate(PAIRS):
        s = hodge_star(_elementary(i, j), alpha)
        for l, (p, q) in enumerate(PAIRS):
            m[l, k] = s[p, q]
    return m


def form_to_vec(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    return np.array([w[i, j] for i, j in PAIRS])


def vec_to_form(v: np.ndarray) -> np.ndarray:
    w = np.zeros((4, 4))
    for k, (i, j) in enumerate(PAIRS):
        w[i, j] = v[k]
        w[j, i] = -v[k]
    return w
