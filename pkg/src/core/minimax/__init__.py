"""
Minimax discrimination of Pauli channel pairs.

This package contains the worst-prior minimax risks, the classification of
when entanglement is needed, the optimal unassisted inputs and the combined
report.
"""

from src.core.minimax.classification import classify
from src.core.minimax.optimal_inputs import (
    InputSolution,
    optimal_input_no_ancilla,
    solve_optimal_inputs,
)
from src.core.minimax.report import analyze_many, full_report
from src.core.minimax.worst_prior import minimax_entangled, minimax_no_ancilla
