"""
Riesz-Caputo derivatives on a finite interval
=============================================

A tour of the one-dimensional operator everything else is built on.
"""

# %%
# The derivative of exp at t = 0.3 using 0.7 of history on the left and 0.2
# of "future" on the right. The order alpha = 0.4.
import numpy as np

from fracmech import Fn1D, left_caputo, rc_derivative, right_caputo

f = Fn1D(np.exp, np.exp)
t, ell_left, ell_right, alpha = 0.3, 0.7, 0.2, 0.4

for m in (10, 100, 1000, 10000):
    print(m, rc_derivative(f, t, ell_left, ell_right, alpha, m))

# %%
# The two one-sided pieces. The right-sided one carries the (-1) of a
# first-order derivative, so for an increasing function it is negative.
print("left ", left_caputo(f, t - ell_left, t, alpha, 1000))
print("right", right_caputo(f, t, t + ell_right, alpha, 1000))

# %%
# Constants are annihilated exactly, whatever the order or interval.
const = Fn1D(lambda s: np.full_like(np.asarray(s, dtype=float), 3.0))
print(rc_derivative(const, 1.0, 0.5, 2.0, 0.27, 50))

# %%
# At alpha = 1 the operator is the classical derivative.
print(rc_derivative(f, t, ell_left, ell_right, 1.0), np.exp(t))

# %%
# Convergence of the product trapezoidal rule on t^3. Errors are measured
# against a fine reference; the rate approaches 2.
cubic = Fn1D(lambda s: s ** 3, lambda s: 3 * s ** 2)
ref = rc_derivative(cubic, 1.0, 1.0, 1.0, 0.5, 2 ** 16)
errs = [abs(rc_derivative(cubic, 1.0, 1.0, 1.0, 0.5, 2 ** k) - ref) for k in range(3, 11)]
print(np.round(np.log2(np.array(errs[:-1]) / errs[1:]), 2))
