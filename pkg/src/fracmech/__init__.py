"""Anisotropic nonlocal kinematics built on finite-interval Riesz-Caputo derivatives."""

from .errors import (
    ConfigError,
    DomainExitError,
    FracmechError,
    IntervalError,
    LegMismatchError,
    NumericalError,
    OrderError,
    SingularMatrixError,
)
from .frac_core import (
    DEFAULT_M,
    DerivativeSpec,
    Fn1D,
    FracOrder,
    Interval,
    VarsigmaMode,
    affine_scale_factor,
    gamma_fn,
    left_caputo,
    rc_derivative,
    right_caputo,
    riesz_caputo,
    varsigma,
)
from .kinematics import (
    BodyBox,
    BoundaryPolicy,
    GradientKind,
    NonlocalHorizon,
    OrderField,
    classical_F,
    classical_F_inverse,
    composite_F,
    frac_F_material,
    frac_F_spatial,
    material_displacement_gradient,
    small_strain_1d,
    spatial_displacement_gradient,
    transport_line_element,
)
from .motion import Motion
from .strains import (
    StrainFamily,
    StrainPair,
    cauchy_green,
    euler_almansi,
    green_lagrange,
    polar_decompose,
    small_strain_tensor,
    strain_pair,
)
from .stress import (
    PKFamily,
    StressState,
    fractional_cauchy,
    jacobian,
    mass_transform,
    normal_transform,
    piola_kirchhoff,
    static_balance_residual,
    traction_transform,
)
from .tensor import MATERIAL, SPATIAL, Tensor2

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DomainExitError",
    "FracmechError",
    "IntervalError",
    "LegMismatchError",
    "NumericalError",
    "OrderError",
    "SingularMatrixError",
    "DEFAULT_M",
    "DerivativeSpec",
    "Fn1D",
    "FracOrder",
    "Interval",
    "VarsigmaMode",
    "affine_scale_factor",
    "gamma_fn",
    "left_caputo",
    "rc_derivative",
    "right_caputo",
    "riesz_caputo",
    "varsigma",
    "BodyBox",
    "BoundaryPolicy",
    "GradientKind",
    "NonlocalHorizon",
    "OrderField",
    "classical_F",
    "classical_F_inverse",
    "composite_F",
    "frac_F_material",
    "frac_F_spatial",
    "material_displacement_gradient",
    "small_strain_1d",
    "spatial_displacement_gradient",
    "transport_line_element",
    "Motion",
    "StrainFamily",
    "StrainPair",
    "cauchy_green",
    "euler_almansi",
    "green_lagrange",
    "polar_decompose",
    "small_strain_tensor",
    "strain_pair",
    "PKFamily",
    "StressState",
    "fractional_cauchy",
    "jacobian",
    "mass_transform",
    "normal_transform",
    "piola_kirchhoff",
    "static_balance_residual",
    "traction_transform",
    "MATERIAL",
    "SPATIAL",
    "Tensor2",
]
