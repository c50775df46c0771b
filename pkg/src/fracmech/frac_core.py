r"""Finite-interval Caputo and Riesz-Caputo derivatives.

All operators are restricted to orders :math:`0 < \alpha \le 1`, so the
integer part is always :math:`n = 1` and only the first derivative of the
integrand is ever sampled. The one-sided derivatives are

.. math::

    {}_a^C D_t^\alpha f(t) = \frac{1}{\Gamma(1 - \alpha)}
        \int_a^t \frac{f'(\tau)}{(t - \tau)^\alpha} \,\mathrm{d}\tau,
    \qquad
    {}_t^C D_b^\alpha f(t) = \frac{-1}{\Gamma(1 - \alpha)}
        \int_t^b \frac{f'(\tau)}{(\tau - t)^\alpha} \,\mathrm{d}\tau,

and the Riesz-Caputo combination is

.. math::

    {}^{RC}_a D_b^\alpha f(t) = \frac{\varsigma(\alpha)}{2}
        \left({}_a^C D_t^\alpha f(t) - {}_t^C D_b^\alpha f(t)\right),

which reduces to :math:`f'(t)` at :math:`\alpha = 1` when
:math:`\varsigma(1) = 1`. Both one-sided integrals are approximated with the
modified (product) trapezoidal rule: :math:`f'` is interpolated linearly
between equispaced nodes and the weakly singular kernel is integrated
exactly, which makes the rule exact whenever :math:`f'` is affine.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import IntervalError, OrderError

DEFAULT_M = 100


def gamma_fn(x: float) -> float:
    """Euler gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise ValueError(f"gamma_fn is defined here for finite x > 0, got {x!r}")
    return math.gamma(x)


@dataclass(frozen=True)
class FracOrder:
    """Fractional order in ``(0, 1]``; ``alpha == 1`` is the classical limit."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (0.0 < a <= 1.0):
            raise OrderError(f"fractional order must lie in (0, 1], got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)

    @property
    def is_classical(self) -> bool:
        return self.alpha == 1.0

    def __float__(self):
        return self.alpha


def as_order(alpha: Union[float, FracOrder]) -> FracOrder:
    return alpha if isinstance(alpha, FracOrder) else FracOrder(alpha)


class VarsigmaMode(enum.Enum):
    """Choice of the scalar weight in front of the Riesz-Caputo combination."""

    GAMMA_TWO_MINUS_ALPHA = "gamma"


VarsigmaLike = Union[VarsigmaMode, Callable[[float], float], None]


def varsigma(alpha: Union[float, FracOrder], mode: VarsigmaLike = None) -> float:
    """Weight of the Riesz-Caputo combination.

    ``mode`` is ``None`` or :attr:`VarsigmaMode.GAMMA_TWO_MINUS_ALPHA` for the
    default :math:`\\Gamma(2 - \\alpha)`; any callable is used as a custom
    weight and is evaluated at the float order.
    """
    a = as_order(alpha).alpha
    if mode is None or mode is VarsigmaMode.GAMMA_TWO_MINUS_ALPHA:
        return gamma_fn(2.0 - a)
    if callable(mode):
        return float(mode(a))
    raise TypeError(f"unsupported varsigma mode: {mode!r}")


def fd_step(t):
    """Central-difference step used when no analytic derivative is given."""
    return np.maximum(1e-6, 1e-8 * np.abs(t))


@dataclass(frozen=True)
class Fn1D:
    """Scalar function with an optional analytic first derivative.

    Both callables should accept numpy arrays. Without ``derivative`` a
    central difference with step ``max(1e-6, 1e-8 |t|)`` is used, which
    limits the achievable quadrature accuracy to roughly ``1e-6``.
    """

    value: Callable
    derivative: Optional[Callable] = None

    def __call__(self, t):
        return self.value(t)

    def d1(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        if self.derivative is not None:
            out = self.derivative(t)
        else:
            h = fd_step(t)
            out = (np.asarray(self.value(t + h), dtype=float)
                   - np.asarray(self.value(t - h), dtype=float)) / (2.0 * h)
        return np.broadcast_to(np.asarray(out, dtype=float), t.shape)


def as_fn1d(f) -> Fn1D:
    return f if isinstance(f, Fn1D) else Fn1D(f)


@dataclass(frozen=True)
class Interval:
    """Terminals ``a < b`` and an evaluation point ``t`` between them."""

    a: float
    b: float
    t: float

    def __post_init__(self):
        vals = (float(self.a), float(self.b), float(self.t))
        if not all(math.isfinite(v) for v in vals):
            raise IntervalError(f"non-finite interval {vals}")
        if not (vals[0] < vals[2] < vals[1]):
            raise IntervalError(f"need a < t < b, got a={vals[0]}, t={vals[2]}, b={vals[1]}")
        object.__setattr__(self, "a", vals[0])
        object.__setattr__(self, "b", vals[1])
        object.__setattr__(self, "t", vals[2])

    @classmethod
    def around(cls, t: float, ell_left: float, ell_right: float) -> "Interval":
        """Interval ``(t - ell_left, t + ell_right)`` evaluated at ``t``."""
        return cls(t - ell_left, t + ell_right, t)


@dataclass(frozen=True)
class DerivativeSpec:
    order: FracOrder
    interval: Interval
    m_left: int = DEFAULT_M
    m_right: int = DEFAULT_M
    varsigma_mode: VarsigmaLike = None

    def __post_init__(self):
        object.__setattr__(self, "order", as_order(self.order))
        _check_m(self.m_left)
        _check_m(self.m_right)


def _check_m(m) -> int:
    if isinstance(m, bool) or int(m) != m or m < 2:
        raise IntervalError(f"subdivision count must be an integer >= 2, got {m!r}")
    return int(m)


def trapezoid_weights(m: int, alpha: float) -> np.ndarray:
    """Weights of the left-sided modified trapezoidal rule, nodes ``t_0..t_m``.

    With ``p = 2 - alpha`` the weights are ``(m-1)^p - (m+alpha-2) m^(1-alpha)``
    at ``t_0``, ``(m-j+1)^p - 2 (m-j)^p + (m-j-1)^p`` at interior nodes and 1 at
    ``t_m``. Second differences are formed from first differences computed via
    ``expm1``/``log1p`` to keep cancellation under control for large ``m``.
    """
    m = _check_m(m)
    p = 2.0 - alpha
    k = np.arange(1, m, dtype=float)
    # d[k] = (k+1)^p - k^p for k = 0..m-1
    d = np.empty(m)
    d[0] = 1.0
    d[1:] = k ** p * np.expm1(p * np.log1p(1.0 / k))
    w = np.empty(m + 1)
    w[m] = 1.0
    # interior node j <-> k = m - j
    w[1:m] = (d[1:] - d[:-1])[::-1]
    w[0] = (2.0 - alpha) * m ** (1.0 - alpha) - d[m - 1]
    return w


def left_caputo(f, a: float, t: float, alpha, m: int = DEFAULT_M) -> float:
    """Left-sided Caputo derivative on ``(a, t)`` by the modified trapezoidal rule."""
    order = as_order(alpha)
    m = _check_m(m)
    a, t = float(a), float(t)
    if not (math.isfinite(a) and math.isfinite(t) and a < t):
        raise IntervalError(f"left Caputo derivative needs a < t, got a={a}, t={t}")
    f = as_fn1d(f)
    if order.is_classical:
        return float(f.d1(t))
    al = order.alpha
    h = (t - a) / m
    nodes = np.linspace(a, t, m + 1)
    w = trapezoid_weights(m, al)
    return float(h ** (1.0 - al) / gamma_fn(3.0 - al) * np.dot(w, f.d1(nodes)))


def right_caputo(f, t: float, b: float, alpha, m: int = DEFAULT_M) -> float:
    """Right-sided Caputo derivative on ``(t, b)``, including the ``(-1)^n`` sign.

    At ``alpha == 1`` this returns ``-f'(t)``, the limit of the right-sided
    operator, so that the Riesz-Caputo combination reduces to ``f'(t)``.
    """
    order = as_order(alpha)
    m = _check_m(m)
    t, b = float(t), float(b)
    if not (math.isfinite(t) and math.isfinite(b) and t < b):
        raise IntervalError(f"right Caputo derivative needs t < b, got t={t}, b={b}")
    f = as_fn1d(f)
    if order.is_classical:
        return -float(f.d1(t))
    al = order.alpha
    h = (b - t) / m
    nodes = np.linspace(t, b, m + 1)
    # right-sided coefficients are the left-sided ones read backwards
    w = trapezoid_weights(m, al)[::-1]
    return float(-(h ** (1.0 - al)) / gamma_fn(3.0 - al) * np.dot(w, f.d1(nodes)))


def riesz_caputo(f, spec: DerivativeSpec) -> float:
    """Riesz-Caputo derivative described by ``spec``.

    ``alpha == 1`` short-circuits to the classical derivative ``f'(t)``.
    """
    f = as_fn1d(f)
    iv = spec.interval
    if spec.order.is_classical:
        return float(f.d1(iv.t))
    left = left_caputo(f, iv.a, iv.t, spec.order, spec.m_left)
    right = right_caputo(f, iv.t, iv.b, spec.order, spec.m_right)
    return 0.5 * varsigma(spec.order, spec.varsigma_mode) * (left - right)


def rc_derivative(f, t: float, ell_left: float, ell_right: float, alpha,
                  m: int = DEFAULT_M, varsigma_mode: VarsigmaLike = None) -> float:
    """Shorthand for :func:`riesz_caputo` on ``(t - ell_left, t + ell_right)``."""
    spec = DerivativeSpec(as_order(alpha), Interval.around(t, ell_left, ell_right),
                          m, m, varsigma_mode)
    return riesz_caputo(f, spec)


def affine_scale_factor(alpha, ell_left: float, ell_right: float, ell: Optional[float] = None,
                        varsigma_mode: VarsigmaLike = None) -> float:
    r"""Closed-form factor by which a scaled RC derivative rescales affine maps.

    For :math:`f(t) = c\,t` the quantity
    :math:`\ell^{\alpha-1}\,{}^{RC}D^\alpha f` equals :math:`c\,\mathcal{M}` with

    .. math::

        \mathcal{M} = \frac{\varsigma(\alpha)}{2\Gamma(2-\alpha)}\,\ell^{\alpha-1}
            \left(\ell_L^{1-\alpha} + \ell_R^{1-\alpha}\right).

    ``ell`` defaults to the mean of the two terminal distances.
    """
    a = as_order(alpha).alpha
    if ell is None:
        ell = 0.5 * (ell_left + ell_right)
    return (varsigma(a, varsigma_mode) / (2.0 * gamma_fn(2.0 - a)) * ell ** (a - 1.0)
            * (ell_left ** (1.0 - a) + ell_right ** (1.0 - a)))
