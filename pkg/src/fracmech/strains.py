"""Strain measures built from any of the (fractional) deformation gradients.

``Fd`` below stands for whichever gradient feeds the formula: ``F``,
``F~_X``, ``F~_x`` or the composite ``F^alpha``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import SingularMatrixError
from .frac_core import DEFAULT_M, VarsigmaLike
from .kinematics import (
    UNBOUNDED,
    BodyBox,
    GradientKind,
    NonlocalHorizon,
    OrderField,
    composite_F,
)
from .motion import Motion
from .tensor import MATERIAL, SPATIAL, Tensor2, as_tensor


class StrainFamily(enum.Enum):
    CLASSICAL = "classical"
    FRAC_MATERIAL = "frac_material"
    FRAC_SPATIAL = "frac_spatial"
    ALPHA = "alpha"


_FAMILY_GRADIENT = {
    StrainFamily.CLASSICAL: GradientKind.CLASSICAL,
    StrainFamily.FRAC_MATERIAL: GradientKind.FRAC_MATERIAL,
    StrainFamily.FRAC_SPATIAL: GradientKind.FRAC_SPATIAL,
    StrainFamily.ALPHA: GradientKind.ALPHA_COMPOSITE,
}


@dataclass(frozen=True)
class StrainPair:
    """Lagrangian strain ``E`` (material legs) and Eulerian strain ``e`` (spatial legs).

    ``asymmetry`` records the largest skew part removed when symmetrising,
    a diagnostic for quadrature noise.
    """

    E: Tensor2
    e: Tensor2
    asymmetry: float = 0.0


def _sym(arr: np.ndarray, leg: str):
    t = Tensor2(arr, (leg, leg))
    return t.sym(), t.asymmetry()


def green_lagrange(Fd) -> Tensor2:
    """``E = (Fd^T Fd - I) / 2``."""
    Fd = as_tensor(Fd)
    C = Fd.T @ Fd
    return Tensor2(0.5 * (C.array - np.eye(3)), C.legs).sym()


def euler_almansi(Fd) -> Tensor2:
    """``e = (i - Fd^-T Fd^-1) / 2``."""
    Fd = as_tensor(Fd)
    Finv = Fd.inv()
    B = Finv.T @ Finv
    return Tensor2(0.5 * (np.eye(3) - B.array), B.legs).sym()


def cauchy_green(Fd):
    """Right and left Cauchy-Green tensors ``(C, b) = (Fd^T Fd, Fd Fd^T)``."""
    Fd = as_tensor(Fd)
    return (Fd.T @ Fd).sym(), (Fd @ Fd.T).sym()


def polar_decompose(Fd, tol: float = 1e-12, max_iter: int = 100):
    """Polar decomposition ``Fd = R U = V R``.

    Newton iteration ``R <- (R + R^-T) / 2`` started from ``Fd``; stops once
    successive iterates differ by less than ``tol`` (max norm) or after
    ``max_iter`` steps. Requires ``det Fd > 0``.
    """
    Fd = as_tensor(Fd)
    if not Fd.det() > 0.0:
        raise SingularMatrixError(f"polar decomposition needs det > 0, got {Fd.det()}")
    R = Fd.array.copy()
    for _ in range(max_iter):
        R_next = 0.5 * (R + np.linalg.inv(R).T)
        done = np.max(np.abs(R_next - R)) < tol
        R = R_next
        if done:
            break
    rot = Tensor2(R, Fd.legs)
    U = (rot.T @ Fd).sym()
    V = (Fd @ rot.T).sym()
    return rot, U, V


def small_strain_tensor(grad_u) -> Tensor2:
    """Symmetric part ``(grad u + grad u^T) / 2``."""
    g = as_tensor(grad_u)
    return Tensor2(0.5 * (g.array + g.array.T), (g.legs[0], g.legs[0]))


def strain_pair(family: StrainFamily, motion: Motion, X, orders: Optional[OrderField] = None,
                horizon: Optional[NonlocalHorizon] = None, m: int = DEFAULT_M, t: float = 0.0,
                *, spatial_horizon: Optional[NonlocalHorizon] = None,
                box: BodyBox = UNBOUNDED, spatial_box: BodyBox = UNBOUNDED,
                varsigma_mode: VarsigmaLike = None) -> StrainPair:
    """Strain pair of one family at the material point ``X``.

    The gradient-based families use the Green-Lagrange/Euler-Almansi pair of
    their gradient. The spatial family is built from the inverse of ``F~_x``:
    ``E = (F~_x^-T F~_x^-1 - I) / 2`` and ``e = (i - F~_x^T F~_x) / 2``.
    """
    family = StrainFamily(family)
    kind = _FAMILY_GRADIENT[family]
    if family is StrainFamily.CLASSICAL:
        Fd = composite_F(kind, motion, X, t)
    else:
        if orders is None or horizon is None:
            raise TypeError(f"{family.name} strains need orders and horizon")
        Fd = composite_F(kind, motion, X, t, orders, horizon, m,
                         spatial_horizon=spatial_horizon, box=box, spatial_box=spatial_box,
                         varsigma_mode=varsigma_mode)
    return strain_pair_from_gradient(family, Fd)


def strain_pair_from_gradient(family: StrainFamily, Fd: Tensor2) -> StrainPair:
    """Strain pair of ``family`` from its already computed gradient.

    ``Fd`` is ``F~_x`` for the spatial family and ``F``, ``F~_X`` or
    ``F^alpha`` otherwise.
    """
    family = StrainFamily(family)
    Fd = as_tensor(Fd)
    Finv = Fd.inv()
    if family is StrainFamily.FRAC_SPATIAL:
        E, skew_E = _sym(0.5 * ((Finv.T @ Finv).array - np.eye(3)), MATERIAL)
        e, skew_e = _sym(0.5 * (np.eye(3) - (Fd.T @ Fd).array), SPATIAL)
    else:
        E, skew_E = _sym(0.5 * ((Fd.T @ Fd).array - np.eye(3)), MATERIAL)
        e, skew_e = _sym(0.5 * (np.eye(3) - (Finv.T @ Finv).array), SPATIAL)
    return StrainPair(E, e, max(skew_E, skew_e))
