"""
Trotterised evolution of the XXZ chain
======================================

exp(-zH) is approximated by the L-th power of a product of bond
exponentials. The error falls like 1/L, and the product is itself a
transfer matrix of the vertex model built from the bond operator.
"""
import numpy as np

from yblab.spin_chain import (
    alpha_of_J,
    correspondence_residual,
    epsilon_of_u,
    spin_vertex_bridge_residual,
    trotter_order,
)

for z in (0.5, 0.5j):
    rep = trotter_order(1.0, z, 4, [8, 16, 32, 64])
    print(f"z={z}: errors {np.round(rep.errors, 6)}  slope {rep.slope:.3f}")

# two sites: both bonds act on the same pair, so the product is exact
print("N=2:", trotter_order(1.0, 0.5, 2, [8, 16, 32]).errors)

# bond operator vs. transfer matrix of its R form
for eps in (0.1, 0.05):
    print(f"bridge eps={eps}: {spin_vertex_bridge_residual(1.0, eps, 3):.3e}")

# matching the bond operator to the six-vertex weights, J = cosh(alpha)
alpha = alpha_of_J(2.0)
for u in (0.2, 0.1, 0.05):
    c, res = correspondence_residual(2.0, u)
    print(f"u={u}: eps={epsilon_of_u(u, alpha).real:.6f}  c={c.real:.4f}  residual {res:.3e}")
