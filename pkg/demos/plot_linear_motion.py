"""
A linear stretch seen through anisotropic nonlocality
=====================================================

For x_1 = (1 + beta) X_1 the fractional material gradient is the classical
one scaled by a single factor M that depends only on the order and on how
the horizon splits left and right of the point.
"""

# %%
import numpy as np

from fracmech import NonlocalHorizon, OrderField, affine_scale_factor, frac_F_material
from fracmech import green_lagrange
from fracmech import motion as mo

beta = 0.2
phi = mo.linear_stretch(beta)
X = (1.0, 0.0, 0.0)

# %%
# Symmetric horizon: M = 1 and nothing changes.
F = frac_F_material(phi, X, 0.0, OrderField.uniform(0.5), NonlocalHorizon.symmetric(0.5), 1000)
print(np.round(F.array, 12))

# %%
# Lopsided horizon, 0.9 to the left and 0.1 to the right.
h = NonlocalHorizon.uniform(0.9, 0.1, 0.5)
F = frac_F_material(phi, X, 0.0, OrderField.uniform(0.5), h, 1000)
M = affine_scale_factor(0.5, 0.9, 0.1, 0.5)
print("M =", M)
print(np.round(F.array / M, 10))

# %%
# The transverse directions did not move, yet they now carry strain.
E = green_lagrange(F)
print(np.round(np.diag(E.array), 6), 0.5 * (M ** 2 - 1))

# %%
# The scale factor as a function of order and anisotropy ratio r = ell_L / ell_R.
for alpha in (0.3, 0.5, 0.7, 0.9, 1.0):
    row = []
    for r in (1, 3, 9):
        hr = NonlocalHorizon.from_ratio(0.5, r)
        row.append(affine_scale_factor(alpha, hr.ell_L[0, 0], hr.ell_R[0, 0], 0.5))
    print(alpha, np.round(row, 6))
