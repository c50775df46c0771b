"""
Pulling stresses back through fractional gradients
==================================================

The Cauchy stress is unchanged by the fractional description; what changes
is the gradient used to build the Piola-Kirchhoff stresses.
"""

# %%
import numpy as np

from fracmech import NonlocalHorizon, OrderField, PKFamily, composite_F, piola_kirchhoff
from fracmech import motion as mo
from fracmech.stress import cauchy_from_pk2, static_balance_residual

sigma = np.array([[2.0, 0.3, 0.0], [0.3, 1.0, 0.5], [0.0, 0.5, -0.7]])
phi = mo.exponential_stretch()
X = (0.8, 0.0, 0.0)
h = NonlocalHorizon.from_ratio(0.3, 3.0)

kinds = {PKFamily.CLASSICAL: "classical", PKFamily.FRAC_MATERIAL: "frac_material",
         PKFamily.FRAC_SPATIAL: "frac_spatial", PKFamily.ALPHA: "alpha"}

# %%
# With alpha = 0.6 the four first Piola-Kirchhoff stresses differ...
for family, kind in kinds.items():
    Fd = composite_F(kind, phi, X, 0.0, OrderField.uniform(0.6), h)
    P, S = piola_kirchhoff(family, sigma, Fd)
    back = cauchy_from_pk2(family, S, Fd)
    print(f"{family.value:14s} P11={P[0, 0]: .6f}  push-forward error {np.abs(back.array - sigma).max():.1e}")

# %%
# ...and at alpha = 1 they coincide.
for family, kind in kinds.items():
    Fd = composite_F(kind, phi, X, 0.0, OrderField.uniform(1.0), h)
    print(family.value, np.round(piola_kirchhoff(family, sigma, Fd)[0][0], 12))

# %%
# Static balance: div(sigma^T) + rho f for sigma_11 = X_1 is (1, 0, 0).
def field(p):
    s = np.zeros((3, 3))
    s[0, 0] = p[0]
    return s


print(static_balance_residual(field, 1.0, np.zeros(3), np.array([0.2, 0.1, 0.0])))
