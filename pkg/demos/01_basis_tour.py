"""A tour of the complex Zernike modes V[k, l] on the unit disk."""

# %%
# Each mode is indexed by (k, l): radial degree n = k + l, angular order m = k - l.
from fractions import Fraction

import numpy as np

from zernike_uea.basis import ModeIndex, build_radial, eval_mode, integrate_weighted, radial_table

for k, l in [(0, 0), (1, 0), (1, 1), (3, 1)]:
    idx = ModeIndex(k, l)
    print(f"V[{k},{l}]  n={idx.n}  m={idx.m}  R coefficients={[str(c) for c in build_radial(idx.radial).coeffs]}")

# %%
# Radial polynomials have exact rational coefficients, so orthogonality can be checked exactly.
print(integrate_weighted(radial_table(4, 0), radial_table(4, 0)) == Fraction(1, 10))
print(integrate_weighted(radial_table(4, 2), radial_table(6, 2)))

# %%
# Evaluation is vectorized over radius and angle.
r = np.linspace(0, 1, 5)
print(np.round(eval_mode((2, 0), r, np.zeros_like(r)), 6))
