"""
Bayes risk curves for Pauli channel pairs.

This package contains the exact entangled and eigenstate risk curves, the
unassisted envelope, and the floating-point risk of a general Bloch input.
"""

from src.core.risk.curves import (
    AXIS_ORDER,
    AbcdCoefficients,
    bayes_entanglement_needed,
    bayes_risk_bloch,
    bayes_risk_eigenstate,
    bayes_risk_entangled,
    bayes_risk_no_ancilla,
    bayes_risk_no_ancilla_closed_form,
    bloch_risk_curve,
    eigenstate_curves,
    optimal_bayes_input,
)
