"""
Dense floating-point verification of the exact risk formulas.

This package builds channel outputs as explicit matrices, computes Helstrom
risks and measurements from their spectra, and handles the two-unitary case.
It does not use any of the closed-form risk curves.
"""

from src.oracle.channels import (
    apply_channel,
    bell_output,
    bloch_density,
    is_density_matrix,
    pauli_matrices,
    require_density_matrix,
)
from src.oracle.helstrom import (
    MinimaxResult,
    Povm2,
    helstrom_povm,
    helstrom_risk,
    minimax_states,
    solve_equalizer_weight,
)
from src.oracle.linalg import HermitianMatrix, eigh, trace_norm
from src.oracle.unitary import (
    unitary_bayes_risk,
    unitary_minimax_risk,
    unitary_pair_eigenvalues,
)
