"""Motions ``x = phi(X, t)`` with their inverses and Jacobians.

Every callable acts on arrays whose last axis has length 3, so a single call
can evaluate a whole quadrature grid. Jacobians return arrays of shape
``(..., 3, 3)`` with ``J[..., a, A] = d phi_a / d X_A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .frac_core import fd_step


def fd_jacobian(fn: Callable, X, t: float = 0.0) -> np.ndarray:
    """Central-difference Jacobian of a vectorised map, column by column."""
    X = np.asarray(X, dtype=float)
    jac = np.empty(X.shape + (3,))
    for A in range(3):
        h = fd_step(X[..., A])
        dX = np.zeros_like(X)
        dX[..., A] = h
        diff = np.asarray(fn(X + dX, t)) - np.asarray(fn(X - dX, t))
        jac[..., :, A] = diff / (2.0 * h[..., None])
    return jac


@dataclass(frozen=True)
class Motion:
    """Regular motion with inverse; analytic Jacobians are optional.

    ``time`` is threaded through every call but the shipped motions are
    stationary.
    """

    forward: Callable
    inverse: Callable
    forward_jacobian: Optional[Callable] = None
    inverse_jacobian: Optional[Callable] = None
    name: str = "motion"

    def __call__(self, X, t: float = 0.0) -> np.ndarray:
        return np.asarray(self.forward(np.asarray(X, dtype=float), t), dtype=float)

    def inv(self, x, t: float = 0.0) -> np.ndarray:
        return np.asarray(self.inverse(np.asarray(x, dtype=float), t), dtype=float)

    def jacobian(self, X, t: float = 0.0) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if self.forward_jacobian is None:
            return fd_jacobian(self.forward, X, t)
        return np.broadcast_to(np.asarray(self.forward_jacobian(X, t), dtype=float),
                               X.shape + (3,))

    def inverse_jacobian_at(self, x, t: float = 0.0) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.inverse_jacobian is None:
            return fd_jacobian(self.inverse, x, t)
        return np.broadcast_to(np.asarray(self.inverse_jacobian(x, t), dtype=float),
                               x.shape + (3,))

    def inverted(self) -> "Motion":
        """The inverse map viewed as a motion in its own right."""
        return Motion(self.inverse, self.forward, self.inverse_jacobian,
                      self.forward_jacobian, name=f"inverse({self.name})")

    def roundtrip_error(self, probes, t: float = 0.0) -> float:
        """``max |phi(phi^-1(x)) - x|`` over the probe points."""
        probes = np.atleast_2d(np.asarray(probes, dtype=float))
        return float(np.max(np.abs(self(self.inv(probes, t), t) - probes)))


def affine(matrix, shift=(0.0, 0.0, 0.0), name: str = "affine") -> Motion:
    """``x = A X + c`` for an invertible ``A``."""
    A = np.array(matrix, dtype=float)
    c = np.array(shift, dtype=float)
    Ainv = np.linalg.inv(A)

    def jac(X, t):
        return np.broadcast_to(A, np.shape(X) + (3,))

    def ijac(x, t):
        return np.broadcast_to(Ainv, np.shape(x) + (3,))

    return Motion(lambda X, t: X @ A.T + c, lambda x, t: (x - c) @ Ainv.T, jac, ijac, name)


def identity() -> Motion:
    return affine(np.eye(3), name="identity")


def translation(shift) -> Motion:
    """Rigid translation ``x = X + c``."""
    return affine(np.eye(3), shift, name="translation")


def linear_stretch(beta: float) -> Motion:
    """``x = (1 + beta) X_1 e_1 + X_2 e_2 + X_3 e_3``."""
    return affine(np.diag([1.0 + beta, 1.0, 1.0]), name=f"linear(beta={beta})")


def exponential_stretch() -> Motion:
    """``x = exp(X_1) e_1 + X_2 e_2 + X_3 e_3``; the inverse needs ``x_1 > 0``."""

    def forward(X, t):
        out = np.array(X, dtype=float, copy=True)
        out[..., 0] = np.exp(out[..., 0])
        return out

    def inverse(x, t):
        out = np.array(x, dtype=float, copy=True)
        with np.errstate(invalid="ignore", divide="ignore"):
            out[..., 0] = np.log(out[..., 0])
        return out

    def jac(X, t):
        X = np.asarray(X, dtype=float)
        J = np.zeros(X.shape + (3,))
        J[..., 0, 0] = np.exp(X[..., 0])
        J[..., 1, 1] = 1.0
        J[..., 2, 2] = 1.0
        return J

    def ijac(x, t):
        x = np.asarray(x, dtype=float)
        J = np.zeros(x.shape + (3,))
        x1 = x[..., 0]
        with np.errstate(divide="ignore", invalid="ignore"):
            # log is undefined for x_1 <= 0; NaN lets callers detect the exit
            J[..., 0, 0] = np.where(x1 > 0.0, 1.0 / x1, np.nan)
        J[..., 1, 1] = 1.0
        J[..., 2, 2] = 1.0
        return J

    return Motion(forward, inverse, jac, ijac, name="exponential")


def perturbed_identity(displacement: Callable, eps: float,
                       displacement_jacobian: Optional[Callable] = None) -> Motion:
    """``x = X + eps u(X)``; the inverse is found by fixed-point iteration.

    Only sensible for small ``eps`` (the iteration contracts when
    ``eps * |grad u| < 1``).
    """

    def forward(X, t):
        return X + eps * np.asarray(displacement(X), dtype=float)

    def inverse(x, t):
        X = np.array(x, dtype=float, copy=True)
        for _ in range(200):
            X_new = x - eps * np.asarray(displacement(X), dtype=float)
            if np.max(np.abs(X_new - X)) < 1e-15:
                return X_new
            X = X_new
        return X

    def jac(X, t):
        return np.eye(3) + eps * np.asarray(displacement_jacobian(X), dtype=float)

    return Motion(forward, inverse, jac if displacement_jacobian is not None else None, None, name=f"perturbed(eps={eps})")
