"""Arithmetic over the ring K_alpha of generalized complex numbers.

K_alpha is the two-dimensional commutative ring R[i] with i^2 = alpha.
For alpha = -1 this is the field of complex numbers, for alpha = +1 the
ring of double (split-complex) numbers.  Scalars are represented by
``GenComplex``, tensors with K_alpha entries by ``KTensor`` which keeps
separate real and imaginary parts as numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VALID_ALPHAS = (-1, 1)


def check_alpha(alpha: int) -> int:
    """Validate and normalize the structure parameter alpha."""
    alpha = int(alpha)
    if alpha not in VALID_ALPHAS:
        raise ValueError(f"alpha must be -1 or +1, got {alpha}")
    return alpha


def check_same_alpha(a, b) -> int:
    if a.alpha != b.alpha:
        raise ValueError(f"alpha mismatch: {a.alpha} vs {b.alpha}")
    return a.alpha


@dataclass(frozen=True)
class GenComplex:
    """Scalar a + i*b in K_alpha with i^2 = alpha."""

    re: float
    im: float
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    def __add__(self, other: "GenComplex") -> "GenComplex":
        check_same_alpha(self, other)
        return GenComplex(self.re + other.re, self.im + other.im, self.alpha)

    def __sub__(self, other: "GenComplex") -> "GenComplex":
        check_same_alpha(self, other)
        return GenComplex(self.re - other.re, self.im - other.im, self.alpha)

    def __neg__(self) -> "GenComplex":
        return GenComplex(-self.re, -self.im, self.alpha)

    def __mul__(self, other):
        if isinstance(other, GenComplex):
            check_same_alpha(self, other)
            return GenComplex(
                self.re * other.re + self.alpha * self.im * other.im,
                self.re * other.im + self.im * other.re,
                self.alpha,
            )
        return GenComplex(self.re * other, self.im * other, self.alpha)

    __rmul__ = __mul__

    def conj(self) -> "GenComplex":
        return GenComplex(self.re, -self.im, self.alpha)


class KTensor:
    """Tensor with entries in K_alpha, stored as a (re, im) pair of arrays."""

    __slots__ = ("re", "im", "alpha")

    def __init__(self, re, im=None, alpha=None):
        self.re = np.asarray(re, dtype=float)
        if im is None:
            im = np.zeros_like(self.re)
        self.im = np.asarray(im, dtype=float)
        if self.re.shape != self.im.shape:
            raise ValueError("re and im must have the same shape")
        self.alpha = check_alpha(alpha)

    @property
    def shape(self):
        return self.re.shape

    @classmethod
    def zeros(cls, shape, alpha):
        return cls(np.zeros(shape), np.zeros(shape), alpha)

    def copy(self) -> "KTensor":
        return KTensor(self.re.copy(), self.im.copy(), self.alpha)

    def __add__(self, other: "KTensor") -> "KTensor":
        check_same_alpha(self, other)
        return KTensor(self.re + other.re, self.im + other.im, self.alpha)

    def __sub__(self, other: "KTensor") -> "KTensor":
        check_same_alpha(self, other)
        return KTensor(self.re - other.re, self.im - other.im, self.alpha)

    def __neg__(self) -> "KTensor":
        return KTensor(-self.re, -self.im, self.alpha)

    def __mul__(self, other):
        if isinstance(other, KTensor):
            check_same_alpha(self, other)
            return KTensor(
                self.re * other.re + self.alpha * self.im * other.im,
                self.re * other.im + self.im * other.re,
                self.alpha,
            )
        if isinstance(other, GenComplex):
            if other.alpha != self.alpha:
                raise ValueError("alpha mismatch")
            return KTensor(
                self.re * other.re + self.alpha * self.im * other.im,
                self.re * other.im + self.im * other.re,
                self.alpha,
            )
        return KTensor(self.re * other, self.im * other, self.alpha)

    __rmul__ = __mul__

    def conj(self) -> "KTensor":
        return KTensor(self.re.copy(), -self.im, self.alpha)

    def transpose(self, axes) -> "KTensor":
        return KTensor(self.re.transpose(axes), self.im.transpose(axes), self.alpha)

    def __getitem__(self, idx) -> GenComplex:
        r, i = self.re[idx], self.im[idx]
        if np.isscalar(r) or r.ndim == 0:
            return GenComplex(float(r), float(i), self.alpha)
        return KTensor(r, i, self.alpha)

    def max_abs(self) -> float:
        """Componentwise max-norm over both parts."""
        if self.re.size == 0:
            return 0.0
        return max(np.abs(self.re).max(), np.abs(self.im).max())

    def is_real(self, tol: float = 1e-12) -> bool:
        return np.abs(self.im).max() <= tol if self.im.size else True


def k_einsum(subscripts: str, x: KTensor, y: KTensor) -> KTensor:
    """Two-operand einsum over K_alpha, bilinear in the (re, im) parts."""
    alpha = check_same_alpha(x, y)
    re = np.einsum(subscripts, x.re, y.re) + alpha * np.einsum(subscripts, x.im, y.im)
    im = np.einsum(subscripts, x.re, y.im) + np.einsum(subscripts, x.im, y.re)
    return KTensor(re, im, alpha)
