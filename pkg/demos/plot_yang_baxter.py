"""
Checking the Yang-Baxter equation
=================================

Three R-matrix families on a grid of spectral parameters: the trigonometric
six-vertex weights solve the equation to rounding error, the first-order
XXZ matrix only up to O(eps^2).
"""
import numpy as np

from yblab.integrability import ybe_residual, ybe_residual_b_form
from yblab.rmatrix import SpectralRFamily

grid = np.linspace(0.1, 1.5, 5)

# the six-vertex family R(u) with anisotropy alpha
for alpha in (0.3, 0.7, 1.2):
    fam = SpectralRFamily.six_vertex(alpha)
    worst = max(ybe_residual(fam, lam, mu).relative for lam in grid for mu in grid)
    print(f"six-vertex alpha={alpha}: worst relative residual {worst:.2e}")

# the same check on the scattering (B) form gives the same number
fam = SpectralRFamily.six_vertex(0.7)
print("B form:", ybe_residual_b_form(fam, 1.3 - 0.4, 1.3, 0.4).residual)
print("R form:", ybe_residual(fam, 1.3, 1.3 - 0.4).residual)

# the linearised XXZ matrix fails, with a defect that shrinks like eps^2
fam = SpectralRFamily.xxz_first_order(2.0)
for eps in (0.2, 0.1, 0.05):
    print(f"first order, eps={eps}: residual {ybe_residual(fam, 2 * eps, eps).residual:.3e}")
