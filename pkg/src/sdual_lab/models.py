"""Named model geometries used as golden fixtures.

At the pointwise curvature level the catalog reduces to two holomorphic
fixtures (constant holomorphic sectional curvature c; the product of two
surfaces with opposite curvatures) plus the constant-curvature
quaternionic block and the flat model.  Named aliases map the classical
model spaces onto these fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import forms, kaehler, twistor
from .forms import DEFAULT_TOL
from .karith import KTensor, check_alpha
from .kaehler import HoloCurvature
from .twistor import HermitianBlockRiemann, TwistorTensor

MODEL_NAMES = ("complex_space_form", "product_surfaces", "constant_curvature_q", "flat")


@dataclass(frozen=True)
class ModelDescriptor:
    """Addressable description of a model fixture."""

    name: str
    parameters: tuple = ()
    alpha: int = -1
    n: int = 1

    def __post_init__(self):
        if self.name not in MODEL_NAMES:
            raise ValueError(f"unknown model name {self.name!r}")
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        params = tuple(float(p) for p in self.parameters)
        arity = {"complex_space_form": 1, "product_surfaces": 1,
                 "constant_curvature_q": 1, "flat": 0}[self.name]
        if len(params) != arity:
            raise ValueError(
                f"model {self.name!r} takes {arity} parameter(s), got {len(params)}"
            )
        object.__setattr__(self, "parameters", params)
        if int(self.n) < 1:
            raise ValueError("n must be a positive integer")
        object.__setattr__(self, "n", int(self.n))


def complex_space_form(c: float, alpha: int) -> HoloCurvature:
    """A = c * delta-tilde; holo_ricci gives r = -3c id and s = -12c."""
    return HoloCurvature(float(c) * kaehler.sym_delta(check_alpha(alpha)))


def product_surfaces(lam: float, alpha: int) -> HoloCurvature:
    """Product of two surfaces with opposite curvatures: s = 0 exactly."""
    check_alpha(alpha)
    T = KTensor.zeros((2, 2, 2, 2), alpha)
    T.re[0, 0, 0, 0] = float(lam)
    T.re[1, 1, 1, 1] = -float(lam)
    return HoloCurvature(T)


def flat_holo(alpha: int) -> HoloCurvature:
    return HoloCurvature.zero(check_alpha(alpha))


def constant_curvature_q(c: float, n: int, alpha: int) -> HermitianBlockRiemann:
    """Constant-curvature quaternionic block with twistor curvature 2c.

    R_{IK JL} = -c (G_{IJ} G_{KL} - G_{KJ} G_{IL}) over composite indices
    I = (beta, b) with G_{(beta b)(gamma c)} = g_{beta gamma} delta_{bc};
    the overall sign is fixed by the calibration requirement that the
    induced twistor curvature equals 2c.
    """
    alpha = check_alpha(alpha)
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    g = forms.fibre_metric(alpha)
    Gbig = np.kron(g, np.eye(n))  # composite metric over index (beta*n + b)
    R = -float(c) * (
        np.einsum("ij,kl->ikjl", Gbig, Gbig) - np.einsum("kj,il->ikjl", Gbig, Gbig)
    )
    comp = R.reshape(4, n, 4, n, 4, n, 4, n)
    return HermitianBlockRiemann(n, comp, np.eye(n), alpha)


def quaternionic_kaehler_constant(
    r: TwistorTensor, n: int, s: float, tol: float = DEFAULT_TOL
) -> float:
    """Expected twistor curvature -alpha s / (4 (n + 2)).

    The input must act as a single scalar on the self-dual module (the
    quaternionic-Kaehler eigenform pattern) and that scalar must agree
    with the value implied by s; otherwise the pattern is violated.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    ok, measured = twistor.constant_twistor_curvature(r, tol)
    scale = max(1.0, float(np.abs(r.components).max()))
    if not ok:
        raise ValueError("input does not have constant twistor curvature")
    expected = -r.alpha * float(s) / (4.0 * (n + 2))
    if abs(expected - measured) > tol * scale:
        raise ValueError(
            f"twistor curvature {measured:g} disagrees with the value "
            f"{expected:g} implied by s"
        )
    return expected


ALIASES = {
    "CP2": ModelDescriptor("complex_space_form", (1.0,), -1),
    "CH2": ModelDescriptor("complex_space_form", (-1.0,), -1),
    "C2": ModelDescriptor("flat", (), -1),
    "double_plane": ModelDescriptor("complex_space_form", (1.0,), 1),
    "null_pairs": ModelDescriptor("flat", (), 1),
}


def resolve(name: str, **overrides) -> ModelDescriptor:
    """Descriptor for a canonical model name or alias."""
    if name in ALIASES:
        base = ALIASES[name]
        if overrides:
            base = ModelDescriptor(
                base.name,
                overrides.get("parameters", base.parameters),
                overrides.get("alpha", base.alpha),
                overrides.get("n", base.n),
            )
        return base
    return ModelDescriptor(
        name,
        overrides.get("parameters", ()),
        overrides.get("alpha", -1),
        overrides.get("n", 1),
    )


def build(descriptor: ModelDescriptor):
    """Construct the fixture tensor for a descriptor."""
    name = descriptor.name
    if name == "complex_space_form":
        return complex_space_form(descriptor.parameters[0], descriptor.alpha)
    if name == "product_surfaces":
        return product_surfaces(descriptor.parameters[0], descriptor.alpha)
    if name == "constant_curvature_q":
        return constant_curvature_q(
            descriptor.parameters[0], descriptor.n, descriptor.alpha
        )
    if name == "flat":
        return flat_holo(descriptor.alpha)
    raise ValueError(f"unknown model name {name!r}")
