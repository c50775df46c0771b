"""Stress measures, mass conservation and the static local balance residual.

The fractional Cauchy stress coincides with the classical one; all
nonlocality enters through the gradient used to pull stresses back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import LegMismatchError, SingularMatrixError
from .tensor import SPATIAL, Tensor2, as_tensor


class PKFamily(enum.Enum):
    CLASSICAL = "classical"
    FRAC_MATERIAL = "frac_material"
    FRAC_SPATIAL = "frac_spatial"
    ALPHA = "alpha"


@dataclass(frozen=True)
class StressState:
    """Cauchy stress with densities and body force per unit mass."""

    sigma: Tensor2
    rho0: float
    rho: float
    f: np.ndarray

    def __post_init__(self):
        sigma = as_tensor(self.sigma, (SPATIAL, SPATIAL))
        if sigma.asymmetry() > 1e-12:
            raise ValueError("Cauchy stress must be symmetric")
        if not (self.rho0 > 0 and self.rho > 0):
            raise ValueError("densities must be positive")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "f", np.asarray(self.f, dtype=float))


def jacobian(Fd) -> float:
    """``J = det Fd``."""
    return as_tensor(Fd).det()


def mass_transform(rho0: float, Fd) -> float:
    """Spatial density ``rho = rho0 / J`` from ``rho0 = J rho``."""
    J = jacobian(Fd)
    if not J > 0.0:
        raise SingularMatrixError(f"mass transform needs J > 0, got {J}")
    return rho0 / J


def _check_alpha_spatial_side(F_alpha_X: Tensor2) -> Tensor2:
    F_alpha_X = as_tensor(F_alpha_X, (SPATIAL, SPATIAL))
    if F_alpha_X.legs != (SPATIAL, SPATIAL):
        raise LegMismatchError(f"expected a spatial one-configuration tensor, got legs {F_alpha_X.legs}")
    return F_alpha_X


def normal_transform(n, F_alpha_X) -> np.ndarray:
    """``n~ = F^alpha_X n``. The result is not re-normalised."""
    return _check_alpha_spatial_side(F_alpha_X) @ np.asarray(n, dtype=float)


def traction_transform(t_n, F_alpha_X) -> np.ndarray:
    """``t~ = F^alpha_X t``."""
    return _check_alpha_spatial_side(F_alpha_X) @ np.asarray(t_n, dtype=float)


def fractional_cauchy(sigma) -> Tensor2:
    """Fractional Cauchy stress; identical to the classical one."""
    return as_tensor(sigma, (SPATIAL, SPATIAL))


def effective_gradient(family: PKFamily, Fd) -> Tensor2:
    """Gradient playing the role of ``F`` in the pull-back of ``family``.

    For the spatial family ``Fd`` is ``F~_x`` and the role of ``F`` is taken
    by its inverse; for every other family it is ``Fd`` itself.
    """
    Fd = as_tensor(Fd)
    return Fd.inv() if PKFamily(family) is PKFamily.FRAC_SPATIAL else Fd


def piola_kirchhoff(family: PKFamily, sigma, Fd, *, literal_spatial: bool = False):
    """First and second Piola-Kirchhoff stresses ``(P, S)``.

    ``P = J sigma Fd^-T`` and ``S = Fd^-1 P`` with ``J = det Fd`` for the
    classical, material and alpha families. For ``FRAC_SPATIAL``, ``Fd`` is
    ``F~_x`` and ``P = J~_x^-1 sigma F~_x^T``, ``S = F~_x P``, i.e. the
    classical pull-back through ``F~_x^-1``; this is the form that coincides
    with the classical pair when all orders equal 1. ``literal_spatial=True``
    swaps ``F~_x^T`` for ``F~_x^-T`` in ``P``, which does not have that
    property.
    """
    family = PKFamily(family)
    sigma = as_tensor(sigma, (SPATIAL, SPATIAL)).array
    Fd = as_tensor(Fd)
    Fd.inv()  # singularity / conditioning check
    if family is PKFamily.FRAC_SPATIAL:
        A = Fd.array
        Jx = np.linalg.det(A)
        tail = np.linalg.inv(A).T if literal_spatial else A.T
        P = sigma @ tail / Jx
        S = A @ P
    else:
        A = Fd.array
        J = np.linalg.det(A)
        Ainv = np.linalg.inv(A)
        P = J * sigma @ Ainv.T
        S = Ainv @ P
    mat = Fd.legs[1] if family is not PKFamily.FRAC_SPATIAL else Fd.legs[0]
    return Tensor2(P, (SPATIAL, mat)), Tensor2(S, (mat, mat))


def cauchy_from_pk2(family: PKFamily, S, Fd) -> Tensor2:
    """Push ``S`` forward: ``G S G^T / det G`` with ``G`` the effective gradient."""
    G = effective_gradient(family, Fd).array
    S = as_tensor(S).array
    return Tensor2(G @ S @ G.T / np.linalg.det(G), (SPATIAL, SPATIAL))


def divergence_transpose(field: Callable, x, h: float) -> np.ndarray:
    """Central-difference ``div sigma^T``: component ``i`` is ``d sigma_ji / d x_j``."""
    x = np.asarray(x, dtype=float)
    div = np.zeros(3)
    for j in range(3):
        dx = np.zeros(3)
        dx[j] = h
        plus = np.asarray(field(x + dx), dtype=float)
        minus = np.asarray(field(x - dx), dtype=float)
        div += (plus[j, :] - minus[j, :]) / (2.0 * h)
    return div


def static_balance_residual(sigma_field: Callable, rho: float, f, X, h: float = 1e-4) -> np.ndarray:
    """Residual ``div sigma^T + rho f`` of the static local balance at ``X``.

    ``sigma_field`` maps a point to a 3x3 array (or :class:`Tensor2`). The
    default step suits bodies of unit size; scale it with the domain.
    """
    def field(p):
        return np.asarray(sigma_field(p), dtype=float)

    return divergence_transpose(field, X, h) + rho * np.asarray(f, dtype=float)
