"""
Partition functions of the six-vertex model
===========================================

The row-to-row transfer matrix gives Z = trace(t^M) on a periodic N x M
lattice; for small lattices this is compared with a direct sum over all
link configurations.
"""
import math

from yblab.lattice import LatticeSpec, commuting_family_residual, partition_bruteforce, partition_transfer
from yblab.rmatrix import SpectralRFamily, six_vertex

alpha, u = 1.0, 0.5
r = six_vertex(alpha, u)

# one vertex: four configurations, Z = 2 sinh(u + alpha) + 2 sinh(u)
print("1x1:", partition_transfer(r, LatticeSpec(1, 1)).real, 2 * math.sinh(u + alpha) + 2 * math.sinh(u))

for N, M in [(2, 2), (2, 3), (3, 3)]:
    lat = LatticeSpec(N, M)
    zt, zb = partition_transfer(r, lat), partition_bruteforce(r, lat)
    print(f"{N}x{M}: transfer {zt.real:.10e}  brute force {zb.real:.10e}  ({2 ** lat.n_links} configurations)")

# transfer matrices at different spectral parameters commute with each other
# and with the lattice shift
print("commutator:", commuting_family_residual(SpectralRFamily.six_vertex(0.7), 3, 0.3, 1.1))
