"""Pointwise engine for self-dual generalized quaternionic/Kaehler geometry."""

from .forms import (
    DEFAULT_TOL,
    asd_basis,
    asd_coordinates,
    asd_project,
    fibre_metric,
    from_asd_coordinates,
    from_sd_coordinates,
    hodge_star,
    inner,
    is_anti_self_dual,
    is_self_dual,
    sd_basis,
    sd_coordinates,
    sd_project,
    volume_form,
)
from .kaehler import (
    HoloCurvature,
    bochner,
    holo_ricci,
    is_anti_self_dual_kaehler,
    is_self_dual_kaehler,
    riemann_real,
    scalar_s,
)
from .karith import GenComplex, KTensor
from .models import (
    ModelDescriptor,
    complex_space_form,
    constant_curvature_q,
    flat_holo,
    product_surfaces,
    quaternionic_kaehler_constant,
)
from .quaternions import (
    GenQuaternion,
    conjugate,
    fundamental_form,
    multiply,
    norm_form,
    pseudofundamental_form,
    rep_first,
    rep_second,
)
from .twistor import (
    HermitianBlockRiemann,
    TwistorTensor,
    act,
    bianchi_residual,
    constant_twistor_curvature,
    is_einstein_bundle,
    preserves_sd_module,
    ricci_t,
    semiflat_index,
    semiflat_mapping_checks,
    twistor_curvature_value,
    twistor_from_riemann,
    weyl_split,
    weyl_t,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "GenComplex",
    "GenQuaternion",
    "HermitianBlockRiemann",
    "HoloCurvature",
    "KTensor",
    "ModelDescriptor",
    "TwistorTensor",
    "act",
    "asd_basis",
    "asd_coordinates",
    "asd_project",
    "bianchi_residual",
    "bochner",
    "complex_space_form",
    "conjugate",
    "constant_curvature_q",
    "constant_twistor_curvature",
    "fibre_metric",
    "flat_holo",
    "from_asd_coordinates",
    "from_sd_coordinates",
    "fundamental_form",
    "hodge_star",
    "holo_ricci",
    "inner",
    "is_anti_self_dual",
    "is_anti_self_dual_kaehler",
    "is_einstein_bundle",
    "is_self_dual",
    "is_self_dual_kaehler",
    "multiply",
    "norm_form",
    "preserves_sd_module",
    "product_surfaces",
    "pseudofundamental_form",
    "quaternionic_kaehler_constant",
    "rep_first",
    "rep_second",
    "ricci_t",
    "riemann_real",
    "scalar_s",
    "sd_basis",
    "sd_coordinates",
    "sd_project",
    "semiflat_index",
    "semiflat_mapping_checks",
    "twistor_curvature_value",
    "twistor_from_riemann",
    "volume_form",
    "weyl_split",
    "weyl_t",
]
