"""3x3 second-order tensors that remember which configuration each leg lives in."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import LegMismatchError, SingularMatrixError

MATERIAL = "material"
SPATIAL = "spatial"
_LEGS = (MATERIAL, SPATIAL)

COND_MAX = 1e12


@dataclass(frozen=True, eq=False)
class Tensor2:
    """Second-order tensor ``A_ij e_i (x) e_j`` with basis-tagged legs.

    ``legs[0]`` tags the row basis and ``legs[1]`` the column basis, so the
    classical deformation gradient is ``Tensor2(F, (SPATIAL, MATERIAL))``.
    Products are only allowed when the inner legs agree.
    """

    array: np.ndarray
    legs: Tuple[str, str] = (SPATIAL, MATERIAL)

    def __post_init__(self):
        arr = np.array(self.array, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"Tensor2 needs a 3x3 array, got shape {arr.shape}")
        arr.setflags(write=False)
        legs = tuple(self.legs)
        if len(legs) != 2 or any(leg not in _LEGS for leg in legs):
            raise ValueError(f"legs must be a pair drawn from {_LEGS}, got {self.legs!r}")
        object.__setattr__(self, "array", arr)
        object.__setattr__(self, "legs", legs)

    @classmethod
    def identity(cls, leg: str = MATERIAL, other: str | None = None) -> "Tensor2":
        return cls(np.eye(3), (leg, leg if other is None else other))

    @classmethod
    def zeros(cls, legs=(SPATIAL, MATERIAL)) -> "Tensor2":
        return cls(np.zeros((3, 3)), legs)

    @property
    def is_two_point(self) -> bool:
        return self.legs[0] != self.legs[1]

    @property
    def T(self) -> "Tensor2":
        return Tensor2(self.array.T, self.legs[::-1])

    def __array__(self, dtype=None, copy=None):
        return np.array(self.array, dtype=dtype)

    def __getitem__(self, idx):
        return self.array[idx]

    def __repr__(self):
        return f"Tensor2({self.array.tolist()!r}, legs={self.legs!r})"

    def _same_legs(self, other: "Tensor2", op: str):
        if self.legs != other.legs:
            raise LegMismatchError(f"cannot {op} tensors with legs {self.legs} and {other.legs}")

    def __add__(self, other: "Tensor2") -> "Tensor2":
        self._same_legs(other, "add")
        return Tensor2(self.array + other.array, self.legs)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        self._same_legs(other, "subtract")
        return Tensor2(self.array - other.array, self.legs)

    def __neg__(self) -> "Tensor2":
        return Tensor2(-self.array, self.legs)

    def __mul__(self, scalar) -> "Tensor2":
        return Tensor2(float(scalar) * self.array, self.legs)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Tensor2":
        return Tensor2(self.array / float(scalar), self.legs)

    def __matmul__(self, other):
        if isinstance(other, Tensor2):
            if self.legs[1] != other.legs[0]:
                raise LegMismatchError(
                    f"inner legs do not match: {self.legs} @ {other.legs}")
            return Tensor2(self.array @ other.array, (self.legs[0], other.legs[1]))
        return self.array @ np.asarray(other, dtype=float)

    def det(self) -> float:
        return float(np.linalg.det(self.array))

    def inv(self, cond_max: float = COND_MAX) -> "Tensor2":
        """Inverse via the adjugate; legs swap.

        Raises :class:`SingularMatrixError` when the determinant vanishes or
        the 2-norm condition number exceeds ``cond_max``.
        """
        A = self.array
        cof = np.array([np.cross(A[1], A[2]), np.cross(A[2], A[0]), np.cross(A[0], A[1])])
        det = float(np.dot(A[0], cof[0]))
        if det == 0.0 or not np.isfinite(det):
            raise SingularMatrixError(f"singular tensor (det={det})")
        inv = cof.T / det
        cond = np.linalg.norm(A, 2) * np.linalg.norm(inv, 2)
        if not np.isfinite(cond) or cond > cond_max:
            raise SingularMatrixError(f"ill-conditioned tensor (cond={cond:.3e})")
        return Tensor2(inv, self.legs[::-1])

    def sym(self) -> "Tensor2":
        return Tensor2(0.5 * (self.array + self.array.T), self.legs)

    def asymmetry(self) -> float:
        """Largest entry of ``|A - A^T| / 2``."""
        return float(np.max(np.abs(0.5 * (self.array - self.array.T))))

    def allclose(self, other, rtol=0.0, atol=1e-12) -> bool:
        other_arr = other.array if isinstance(other, Tensor2) else np.asarray(other)
        return bool(np.allclose(self.array, other_arr, rtol=rtol, atol=atol))


def as_tensor(value, legs=(SPATIAL, MATERIAL)) -> Tensor2:
    """Wrap a raw array, leaving existing :class:`Tensor2` objects untouched."""
    return value if isinstance(value, Tensor2) else Tensor2(np.asarray(value, dtype=float), legs)
