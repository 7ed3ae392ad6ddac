"""
Minimax risks of a Pauli channel pair through the worst prior.

The minimax risk equals the Bayes risk at the prior that maximizes it, so both
routines reduce to the exact maximum of a concave piecewise-affine curve.
"""

import logging

from src.core.channels import ChannelPair
from src.core.exactnum import rat_render
from src.core.pwa import MaxPoint, pwa_max_point
from src.core.risk import bayes_risk_entangled, bayes_risk_no_ancilla

logger = logging.getLogger(__name__)


def minimax_entangled(pair: ChannelPair) -> MaxPoint:
    """
    Minimax risk with a maximally entangled input.

    Args:
        pair: Channel pair

    Returns:
        MaxPoint whose value is R_M and whose p_star is a breakpoint p_alpha
        (the left end of the plateau when the maximum is flat)
    """
    peak = pwa_max_point(bayes_risk_entangled(pair))
    logger.debug(
        f"Entangled minimax R_M={rat_render(peak.value)} "
        f"at p*={rat_render(peak.p_star)}"
    )
    return peak


def minimax_no_ancilla(pair: ChannelPair) -> MaxPoint:
    """
    Minimax risk when a single qubit is sent through the channel.

    Args:
        pair: Channel pair

    Returns:
        MaxPoint whose value is R'_M, attained at p'_*
    """
    peak = pwa_max_point(bayes_risk_no_ancilla(pair))
    logger.debug(
        f"Unassisted minimax R'_M={rat_render(peak.value)} "
        f"at p'*={rat_render(peak.p_star)}"
    )
    return peak
