"""The generalized quaternion algebra H_alpha.

Basis {1, j1, j2, j3} with j1^2 = j2^2 = alpha, j3 = j1*j2, j3^2 = -1.
The remaining structure constants follow from associativity:

    j2*j1 = -j3     j1*j3 = alpha*j2     j3*j1 = -alpha*j2
    j2*j3 = -alpha*j1     j3*j2 = alpha*j1

Coefficients may be ints, fractions.Fraction, or floats; arithmetic is
exact whenever the inputs are exact.  The two canonical 4x4 matrix
representations (left and right multiplication in the basis) are exposed
as ``rep_first`` (an algebra homomorphism) and ``rep_second`` (an
anti-homomorphism).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .karith import check_alpha, check_same_alpha


def _is_exact(*values) -> bool:
    return all(not isinstance(v, (float, np.floating)) for v in values)


@dataclass(frozen=True)
class GenQuaternion:
    """q = a + b*j1 + c*j2 + d*j3 in H_alpha."""

    a: object
    b: object
    c: object
    d: object
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def is_pure(self) -> bool:
        return self.a == 0

    def is_exact(self) -> bool:
        return _is_exact(*self.coeffs)

    def __add__(self, other: "GenQuaternion") -> "GenQuaternion":
        check_same_alpha(self, other)
        return GenQuaternion(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d, self.alpha
        )

    def __sub__(self, other: "GenQuaternion") -> "GenQuaternion":
        check_same_alpha(self, other)
        return GenQuaternion(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d, self.alpha
        )

    def __neg__(self) -> "GenQuaternion":
        return GenQuaternion(-self.a, -self.b, -self.c, -self.d, self.alpha)

    def __mul__(self, other):
        if isinstance(other, GenQuaternion):
            return multiply(self, other)
        return GenQuaternion(
            self.a * other, self.b * other, self.c * other, self.d * other, self.alpha
        )

    __rmul__ = __mul__


def basis(alpha: int):
    """The basis quaternions (1, j1, j2, j3)."""
    one = GenQuaternion(1, 0, 0, 0, alpha)
    j1 = GenQuaternion(0, 1, 0, 0, alpha)
    j2 = GenQuaternion(0, 0, 1, 0, alpha)
    j3 = GenQuaternion(0, 0, 0, 1, alpha)
    return one, j1, j2, j3


def multiply(p: GenQuaternion, q: GenQuaternion) -> GenQuaternion:
    """Product p*q from the structure constants."""
    al = check_same_alpha(p, q)
    a1, b1, c1, d1 = p.coeffs
    a2, b2, c2, d2 = q.coeffs
    return GenQuaternion(
        a1 * a2 + al * b1 * b2 + al * c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 - al * c1 * d2 + al * d1 * c2,
        a1 * c2 + c1 * a2 + al * b1 * d2 - al * d1 * b2,
        a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        al,
    )


def conjugate(q: GenQuaternion) -> GenQuaternion:
    return GenQuaternion(q.a, -q.b, -q.c, -q.d, q.alpha)


def norm_form(q: GenQuaternion):
    """The norm form a^2 - alpha*b^2 - alpha*c^2 + d^2 = q * conj(q)."""
    a, b, c, d = q.coeffs
    return a * a - q.alpha * b * b - q.alpha * c * c + d * d


def _to_matrix(rows, exact: bool) -> np.ndarray:
    if exact:
        m = np.empty((4, 4), dtype=object)
        for i in range(4):
            for j in range(4):
                m[i, j] = rows[i][j]
        return m
    return np.array(rows, dtype=float)


def rep_first(q: GenQuaternion) -> np.ndarray:
    """Matrix of left multiplication X -> q*X in the basis {1, j1, j2, j3}."""
    a, b, c, d = q.coeffs
    al = q.alpha
    rows = [
        [a, al * b, al * c, -d],
        [b, a, al * d, -al * c],
        [c, -al * d, a, al * b],
        [d, -c, b, a],
    ]
    return _to_matrix(rows, q.is_exact())


def rep_second(q: GenQuaternion) -> np.ndarray:
    """Matrix of right multiplication X -> X*q in the basis {1, j1, j2, j3}."""
    a, b, c, d = q.coeffs
    al = q.alpha
    rows = [
        [a, al * b, al * c, -d],
        [b, a, -al * d, al * c],
        [c, al * d, a, -al * b],
        [d, c, -b, a],
    ]
    return _to_matrix(rows, q.is_exact())


def _lowered(mat: np.ndarray, q: GenQuaternion) -> np.ndarray:
    if not q.is_pure():
        raise ValueError("form is defined only for pure quaternions (a = 0)")
    al = q.alpha
    g = [1, -al, -al, 1]
    if mat.dtype == object:
        out = np.empty((4, 4), dtype=object)
        for i in range(4):
            for j in range(4):
                out[i, j] = g[i] * mat[i, j]
        return out
    return np.diag(g).astype(float) @ mat


def fundamental_form(q: GenQuaternion) -> np.ndarray:
    """Index-lowered first-kind representation of a pure quaternion (skew)."""
    return _lowered(rep_first(q), q)


def pseudofundamental_form(q: GenQuaternion) -> np.ndarray:
    """Index-lowered second-kind representation of a pure quaternion (skew)."""
    return _lowered(rep_second(q), q)
