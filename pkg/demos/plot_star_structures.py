"""
Hopf and twisted star structures
================================

A unitary B-matrix marks a Hopf star, a hermitian R-matrix a twisted one.
Moving the evolution parameter from the imaginary axis (quantum) to the
real axis (statistical) exchanges the two.
"""
from yblab.integrability import classify_star, wick_scan, wick_verdict_flip
from yblab.linalg import identity_tensor, mat_exp, matrix_to_tensor
from yblab.rmatrix import six_vertex
from yblab.spin_chain import local_h

print("identity:", classify_star(identity_tensor(2)).verdict)
print("exp(-0.3i h):", classify_star(matrix_to_tensor(mat_exp(local_h(2.0), -0.3j))).verdict)
print("six-vertex:", classify_star(six_vertex(1.0, 0.5), form="R").verdict)

scan = wick_scan(local_h(1.0), 1.0, 5)
for z, rep in scan:
    print(f"z={z}: {rep.verdict:8s} unitarity {rep.unitarity_residual:.2e}  hermiticity {rep.hermiticity_residual:.2e}")
print("verdict flips between the axes:", wick_verdict_flip(scan))
