r"""Classical and fractional deformation gradients.

The fractional deformation gradient in the material description has entries

.. math::

    \tilde F_{aA} = \ell_{aA}^{\alpha_{aA} - 1}\;
        {}^{RC}_{X_A - \ell^L_{aA}} D^{\alpha_{aA}}_{X_A + \ell^R_{aA}}\, \phi_a,

where the derivative acts along :math:`X_A` with the other two coordinates
held fixed. The spatial gradient applies the same construction to the
inverse motion along the spatial coordinates. Composite gradients chain
these with the classical ``F``:

====================  ==========================================  ==========
kind                  definition                                  legs
====================  ==========================================  ==========
CLASSICAL             ``F``                                       (s, m)
FRAC_MATERIAL         ``F~_X``                                    (s, m)
FRAC_SPATIAL          ``F~_x``                                    (m, s)
ALPHA_COMPOSITE       ``F~_X F^-1 F~_x^-1``  (dX~ -> dx~)         (s, m)
ALPHA_MATERIAL_SIDE   ``F~_x F``             (dX -> dX~)          (m, m)
ALPHA_SPATIAL_SIDE    ``F~_X F^-1``          (dx -> dx~)          (s, s)
====================  ==========================================  ==========
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainExitError, LegMismatchError, NumericalError, OrderError
from .frac_core import (
    DEFAULT_M,
    DerivativeSpec,
    FracOrder,
    Fn1D,
    Interval,
    VarsigmaLike,
    as_fn1d,
    as_order,
    left_caputo,
    right_caputo,
    riesz_caputo,
    varsigma,
)
from .motion import Motion, fd_jacobian
from .tensor import MATERIAL, SPATIAL, Tensor2


class GradientKind(enum.Enum):
    CLASSICAL = "classical"
    FRAC_MATERIAL = "frac_material"
    FRAC_SPATIAL = "frac_spatial"
    ALPHA_COMPOSITE = "alpha"
    ALPHA_MATERIAL_SIDE = "alpha_material_side"
    ALPHA_SPATIAL_SIDE = "alpha_spatial_side"


LEGS = {
    GradientKind.CLASSICAL: (SPATIAL, MATERIAL),
    GradientKind.FRAC_MATERIAL: (SPATIAL, MATERIAL),
    GradientKind.FRAC_SPATIAL: (MATERIAL, SPATIAL),
    GradientKind.ALPHA_COMPOSITE: (SPATIAL, MATERIAL),
    GradientKind.ALPHA_MATERIAL_SIDE: (MATERIAL, MATERIAL),
    GradientKind.ALPHA_SPATIAL_SIDE: (SPATIAL, SPATIAL),
}


def _matrix(value, name: str) -> np.ndarray:
    arr = np.array(value, dtype=float)
    if arr.ndim == 0:
        arr = np.full((3, 3), float(arr))
    if arr.shape != (3, 3):
        raise ValueError(f"{name} must be a scalar or a 3x3 matrix, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class OrderField:
    """Per-entry fractional orders for the material and spatial gradients.

    ``material[a, A]`` governs ``d phi_a / d X_A`` and ``spatial[A, a]``
    governs ``d phi^-1_A / d x_a``. The two matrices are independent; when
    ``spatial`` is omitted it copies ``material``.
    """

    material: np.ndarray
    spatial: Optional[np.ndarray] = None

    def __post_init__(self):
        mat = _matrix(self.material, "material orders")
        spa = mat if self.spatial is None else _matrix(self.spatial, "spatial orders")
        for name, arr in (("material", mat), ("spatial", spa)):
            if not np.all((arr > 0.0) & (arr <= 1.0)):
                raise OrderError(f"{name} orders must lie in (0, 1], got {arr.tolist()}")
        object.__setattr__(self, "material", mat)
        object.__setattr__(self, "spatial", spa)

    @classmethod
    def uniform(cls, alpha: float, spatial_alpha: Optional[float] = None) -> "OrderField":
        return cls(alpha, spatial_alpha)

    @property
    def is_classical(self) -> bool:
        return bool(np.all(self.material == 1.0) and np.all(self.spatial == 1.0))


@dataclass(frozen=True, eq=False)
class NonlocalHorizon:
    """Left/right terminal distances and the scaling length, entry by entry.

    ``ell`` defaults to ``(ell_L + ell_R) / 2``.
    """

    ell_L: np.ndarray
    ell_R: np.ndarray
    ell: Optional[np.ndarray] = None

    def __post_init__(self):
        lL = _matrix(self.ell_L, "ell_L")
        lR = _matrix(self.ell_R, "ell_R")
        ell = _matrix(0.5 * (lL + lR) if self.ell is None else self.ell, "ell")
        for name, arr in (("ell_L", lL), ("ell_R", lR), ("ell", ell)):
            if not np.all(np.isfinite(arr) & (arr > 0.0)):
                raise ValueError(f"{name} entries must be positive and finite")
        object.__setattr__(self, "ell_L", lL)
        object.__setattr__(self, "ell_R", lR)
        object.__setattr__(self, "ell", ell)

    @classmethod
    def uniform(cls, ell_L: float, ell_R: float, ell: Optional[float] = None) -> "NonlocalHorizon":
        return cls(ell_L, ell_R, ell)

    @classmethod
    def symmetric(cls, ell: float) -> "NonlocalHorizon":
        return cls(ell, ell, ell)

    @classmethod
    def from_ratio(cls, ell: float, ratio: float) -> "NonlocalHorizon":
        """Terminals with ``ell_L / ell_R = ratio`` and mean ``ell``."""
        if not ratio > 0:
            raise ValueError(f"anisotropy ratio must be positive, got {ratio}")
        return cls(2.0 * ell * ratio / (1.0 + ratio), 2.0 * ell / (1.0 + ratio), ell)


class BoundaryPolicy(enum.Enum):
    ERROR = "error"
    CLAMP = "clamp"


@dataclass(frozen=True)
class BodyBox:
    """Axis-aligned box bounding the body (in one configuration)."""

    lower: Sequence[float] = (-np.inf, -np.inf, -np.inf)
    upper: Sequence[float] = (np.inf, np.inf, np.inf)
    policy: BoundaryPolicy = BoundaryPolicy.ERROR

    def terminals(self, axis: int, point: float, ell_L: float, ell_R: float):
        """Interval around ``point`` along ``axis``, checked against the box."""
        a, b = point - ell_L, point + ell_R
        lo, hi = float(self.lower[axis]), float(self.upper[axis])
        if not (lo < point < hi):
            raise DomainExitError(f"point {point} outside body box [{lo}, {hi}] on axis {axis}")
        if a >= lo and b <= hi:
            return a, b
        if self.policy is BoundaryPolicy.ERROR:
            raise DomainExitError(
                f"interval ({a}, {b}) on axis {axis} leaves the body box [{lo}, {hi}]")
        warnings.warn(f"interval ({a}, {b}) on axis {axis} clamped to [{lo}, {hi}]",
                      RuntimeWarning, stacklevel=3)
        return max(a, lo), min(b, hi)


UNBOUNDED = BodyBox()


def _directional_rc(fn, jac, point: np.ndarray, a: int, A: int, alpha: float,
                    ell_L: float, ell_R: float, ell: float, m: int,
                    box: BodyBox, t: float, varsigma_mode: VarsigmaLike) -> float:
    """Scaled RC derivative of component ``a`` of ``fn`` along coordinate ``A``."""
    lo, hi = box.terminals(A, float(point[A]), ell_L, ell_R)

    def along(s):
        pts = np.broadcast_to(point, np.shape(s) + (3,)).copy()
        pts[..., A] = s
        return pts

    if jac is None:
        f = Fn1D(lambda s: fn(along(s), t)[..., a])
    else:
        f = Fn1D(lambda s: fn(along(s), t)[..., a],
                 lambda s: jac(along(s), t)[..., a, A])
    spec = DerivativeSpec(FracOrder(alpha), Interval(lo, hi, float(point[A])), m, m,
                          varsigma_mode)
    return ell ** (alpha - 1.0) * riesz_caputo(f, spec)


def _fractional_gradient(fn, jac, point, t, alpha, horizon: NonlocalHorizon, m, box,
                         varsigma_mode) -> np.ndarray:
    point = np.asarray(point, dtype=float)
    out = np.empty((3, 3))
    classical = None
    for a in range(3):
        for A in range(3):
            if alpha[a, A] == 1.0:
                # exact classical branch; ell^0 = 1
                if classical is None:
                    classical = (jac(point, t) if jac is not None
                             else fd_jacobian(fn, point, t))
                out[a, A] = classical[a, A]
            else:
                out[a, A] = _directional_rc(
                    fn, jac, point, a, A, float(alpha[a, A]),
                    float(horizon.ell_L[a, A]), float(horizon.ell_R[a, A]),
                    float(horizon.ell[a, A]), m, box, t, varsigma_mode)
    if not np.all(np.isfinite(out)):
        raise NumericalError(f"non-finite fractional gradient at {point.tolist()}: "
                             "the nonlocal interval may leave the map's domain")
    return out


def classical_F(motion: Motion, X, t: float = 0.0) -> Tensor2:
    """``F = d phi / d X``; analytic when the motion provides it."""
    return Tensor2(motion.jacobian(np.asarray(X, dtype=float), t), (SPATIAL, MATERIAL))


def classical_F_inverse(motion: Motion, x, t: float = 0.0) -> Tensor2:
    """``F^-1 = d phi^-1 / d x`` evaluated at the spatial point ``x``."""
    return Tensor2(motion.inverse_jacobian_at(np.asarray(x, dtype=float), t),
                   (MATERIAL, SPATIAL))


def frac_F_material(motion: Motion, X, t: float = 0.0, orders: Optional[OrderField] = None,
                    horizon: Optional[NonlocalHorizon] = None, m: int = DEFAULT_M, *,
                    box: BodyBox = UNBOUNDED, varsigma_mode: VarsigmaLike = None) -> Tensor2:
    """Fractional deformation gradient ``F~_X`` at the material point ``X``.

    Entries with order 1 are taken from the classical Jacobian exactly.
    """
    if orders is None or horizon is None:
        raise TypeError("orders and horizon are required")
    arr = _fractional_gradient(motion.forward, motion.forward_jacobian, X, t,
                               orders.material, horizon, m, box, varsigma_mode)
    return Tensor2(arr, (SPATIAL, MATERIAL))


def frac_F_spatial(motion: Motion, x, t: float = 0.0, orders: Optional[OrderField] = None,
                   horizon: Optional[NonlocalHorizon] = None, m: int = DEFAULT_M, *,
                   box: BodyBox = UNBOUNDED, varsigma_mode: VarsigmaLike = None) -> Tensor2:
    """Fractional gradient ``F~_x`` of the inverse motion at the spatial point ``x``.

    ``horizon`` and ``box`` refer to the spatial configuration here.
    """
    if orders is None or horizon is None:
        raise TypeError("orders and horizon are required")
    arr = _fractional_gradient(motion.inverse, motion.inverse_jacobian, x, t,
                               orders.spatial, horizon, m, box, varsigma_mode)
    return Tensor2(arr, (MATERIAL, SPATIAL))


def composite_F(kind: GradientKind, motion: Motion, X, t: float = 0.0,
                orders: Optional[OrderField] = None, horizon: Optional[NonlocalHorizon] = None,
                m: int = DEFAULT_M, *, spatial_horizon: Optional[NonlocalHorizon] = None,
                box: BodyBox = UNBOUNDED, spatial_box: BodyBox = UNBOUNDED,
                varsigma_mode: VarsigmaLike = None) -> Tensor2:
    """Any gradient of :class:`GradientKind`, evaluated at the material point ``X``.

    Spatial quantities are evaluated at ``x = phi(X)``. ``spatial_horizon``
    defaults to ``horizon`` (equal length scales in both configurations).
    Inverses go through :meth:`Tensor2.inv`, which raises
    :class:`~fracmech.errors.SingularMatrixError` past a condition number of
    ``1e12``.
    """
    kind = GradientKind(kind)
    X = np.asarray(X, dtype=float)
    if kind is GradientKind.CLASSICAL:
        return classical_F(motion, X, t)
    if spatial_horizon is None:
        spatial_horizon = horizon
    F = classical_F(motion, X, t)

    def FX():
        return frac_F_material(motion, X, t, orders, horizon, m, box=box,
                               varsigma_mode=varsigma_mode)

    def Fx():
        return frac_F_spatial(motion, motion(X, t), t, orders, spatial_horizon, m,
                              box=spatial_box, varsigma_mode=varsigma_mode)

    if kind is GradientKind.FRAC_MATERIAL:
        return FX()
    if kind is GradientKind.FRAC_SPATIAL:
        return Fx()
    if kind is GradientKind.ALPHA_COMPOSITE:
        return FX() @ F.inv() @ Fx().inv()
    if kind is GradientKind.ALPHA_MATERIAL_SIDE:
        return Fx() @ F
    return FX() @ F.inv()


def material_displacement_gradient(motion: Motion, X, orders: OrderField,
                                   horizon: NonlocalHorizon, m: int = DEFAULT_M,
                                   t: float = 0.0, **kwargs) -> Tensor2:
    """Fractional ``Grad U = F~_X - I`` with ``U(X) = phi(X) - X``."""
    FX = frac_F_material(motion, X, t, orders, horizon, m, **kwargs)
    return FX - Tensor2.identity(*FX.legs)


def spatial_displacement_gradient(motion: Motion, x, orders: OrderField,
                                  horizon: NonlocalHorizon, m: int = DEFAULT_M,
                                  t: float = 0.0, **kwargs) -> Tensor2:
    """Fractional ``grad u = i - F~_x`` with ``u(x) = x - phi^-1(x)``."""
    Fx = frac_F_spatial(motion, x, t, orders, horizon, m, **kwargs)
    return Tensor2.identity(*Fx.legs) - Fx


def small_strain_1d(u, x: float, alpha, ell_L: float, ell_R: float,
                    ell: Optional[float] = None, m: int = DEFAULT_M,
                    varsigma_mode: VarsigmaLike = None) -> float:
    """One-dimensional small fractional strain of the displacement ``u`` at ``x``.

    Combines the left derivative over ``(x - ell_L, x)`` and the right one over
    ``(x, x + ell_R)``, scaled by ``varsigma / 2 * ell^(alpha - 1)``.
    """
    order = as_order(alpha)
    u = as_fn1d(u)
    if order.is_classical:
        return float(u.d1(x))
    if ell is None:
        ell = 0.5 * (ell_L + ell_R)
    left = left_caputo(u, x - ell_L, x, order, m)
    right = right_caputo(u, x, x + ell_R, order, m)
    return 0.5 * varsigma(order, varsigma_mode) * ell ** (order.alpha - 1.0) * (left - right)


def transport_line_element(kind: GradientKind, v, gradient: Tensor2) -> np.ndarray:
    """Map a line element with the gradient of the given kind.

    ``gradient.legs`` must be the legs listed for ``kind`` in the module
    table, e.g. ``dx~ = F~_X dX`` for ``FRAC_MATERIAL``.
    """
    kind = GradientKind(kind)
    if gradient.legs != LEGS[kind]:
        raise LegMismatchError(f"{kind.name} expects legs {LEGS[kind]}, got {gradient.legs}")
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"line element must be a 3-vector, got shape {v.shape}")
    return gradient @ v
