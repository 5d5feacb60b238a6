"""Numerical checks for integrable lattice models.

Yang-Baxter R-matrices, RTT representations, transfer matrices, Trotterized
XXZ evolution, and the Hopf versus twisted star classification of the
representations they define.
"""
from .errors import ConventionError, SizeGuardError, TensorFormatError
from .integrability import (
    StarReport,
    YbeReport,
    classify_star,
    hermiticity_residual,
    symmetry_residual,
    unitarity_residual,
    wick_scan,
    ybe_residual,
    ybe_residual_b_form,
)
from .lattice import (
    LatticeSpec,
    commuting_family_residual,
    cyclic_op,
    partition_bruteforce,
    partition_transfer,
    rep_T,
    rtt_residual,
    transfer_matrix,
)
from .linalg import (
    composite_index,
    embed_two_site,
    kron,
    mat_exp,
    matrix_to_tensor,
    permutation_op,
    tensor_to_matrix,
)
from .rmatrix import (
    SpectralRFamily,
    from_local_hamiltonian,
    gauge_six_vertex,
    rescale,
    six_vertex,
    xxz_first_order,
)
from .spin_chain import (
    correspondence_residual,
    epsilon_of_u,
    evolution,
    hamiltonian,
    local_h,
    spin_vertex_bridge_residual,
    trotter_order,
    trotter_transfer,
)
from .uq_sl2 import (
    build_T,
    convention_search,
    relations_residual,
    rtt_l_residual,
    standard_rep,
    star_check,
)

__version__ = "0.1.0"
