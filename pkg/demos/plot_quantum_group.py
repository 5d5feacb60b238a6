"""
The RTT algebra of U_q(sl2)
===========================

L-operators built from the two-dimensional representation satisfy the RTT
relation with the gauge six-vertex R-matrix, for exactly one choice of the
spectral-parameter factor.
"""
from yblab.uq_sl2 import convention_search, relations_residual, standard_rep, star_check

for gamma in (0.4, 0.6, 1.1):
    rep = standard_rep(gamma)
    star = star_check(rep)
    print(f"gamma={gamma}: relations {relations_residual(rep):.1e}  twisted star {star['twisted_residual']:.1e}"
          f"  hermiticity of x+ {star['hermiticity']['x_plus']:.3f}")

winner, table = convention_search(0.6)
print("winning convention:", winner)
for name, res in table.items():
    print(f"  {name:22s}", ["%.2e" % x for x in res])
