"""
Optimal single-qubit inputs for minimax discrimination without ancilla.

At the unassisted worst prior p'_* either one eigenstate curve peaks on its
own, and the two eigenstates of that Pauli matrix are optimal, or two curves
cross there with opposite slopes. In the second case the optimal input is a
superposition weighting the two axes by cos^2 and sin^2 of a mixing angle,
chosen so the Bayes risk of the mixed state is flat at p'_*:

    {x, y}: theta = pi/2,  tan^2 phi   = -d|c+d| / d|c-d|
    {z, x}: phi in {0, pi}, tan^2 theta = -d|a-b| / d|c+d|
    {z, y}: phi = +-pi/2,   tan^2 theta = -d|a-b| / d|c-d|

Derivatives are taken one-sided and exactly, so kinks at p'_* are handled by
solving the two slope inequalities for the weight instead of one equation.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.config import get_settings
from src.core.channels import AffineForm, ChannelPair
from src.core.errors import InconsistentCrossingError, ThreeWayCrossingError
from src.core.exactnum import ONE, ZERO, rat_render
from src.core.minimax.worst_prior import minimax_no_ancilla
from src.core.models import BlochVector, PauliAxis
from src.core.pwa import PwaFunction
from src.core.risk import (
    AXIS_ORDER,
    AbcdCoefficients,
    bloch_risk_curve,
    eigenstate_curves,
)

logger = logging.getLogger(__name__)

Crossing = Tuple[PauliAxis, PauliAxis]

# Axis pairs in the order (first, second): the first axis carries cos^2
CROSSING_PAIRS: Tuple[Crossing, ...] = (
    (PauliAxis.X, PauliAxis.Y),
    (PauliAxis.Z, PauliAxis.X),
    (PauliAxis.Z, PauliAxis.Y),
)

DIFFERENCE_STEP = 1e-6


@dataclass
class InputSolution:
    """Optimal unassisted inputs at p'_* and how they were obtained."""

    states: List[BlochVector]
    p_star_prime: Fraction
    axis: Optional[PauliAxis] = None
    crossing: Optional[Crossing] = None
    mixing_weight: Optional[Fraction] = None


def eigenstate_pair(axis: PauliAxis) -> List[BlochVector]:
    return [BlochVector.eigenstate(axis, 1), BlochVector.eigenstate(axis, -1)]


def mixed_states(crossing: Crossing, weight: Fraction) -> List[BlochVector]:
    """
    The four sign choices of the superposition with tan^2 = weight.

    Args:
        crossing: (first, second) axis pair from CROSSING_PAIRS
        weight: sin^2 / cos^2 of the mixing angle, >= 0

    Returns:
        Four Bloch vectors (two when the weight is zero)
    """
    alpha = math.acos(math.sqrt(float(mixing_cos_squared(weight))))
    if crossing == (PauliAxis.X, PauliAxis.Y):
        half_pi = math.pi / 2
        candidates = [
            BlochVector.from_angles(half_pi, phi)
            for phi in (alpha, -alpha, math.pi - alpha, math.pi + alpha)
        ]
    else:
        if crossing[1] is PauliAxis.X:
            phis = (0.0, math.pi)
        else:
            phis = (math.pi / 2, -math.pi / 2)
        candidates = [
            BlochVector.from_angles(theta, phi)
            for phi in phis
            for theta in (alpha, math.pi - alpha)
        ]
    unique: List[BlochVector] = []
    for state in candidates:
        if all(_distinct(state, other) for other in unique):
            unique.append(state)
    return unique


def _distinct(first: BlochVector, second: BlochVector) -> bool:
    return max(abs(a - b) for a, b in zip(first.n, second.n)) > 1e-12


def _feasible_weight(
    first: AffineForm, second: AffineForm, p: Fraction
) -> Optional[Fraction]:
    """
    Smallest w >= 0 making |first| + w |second| non-increasing from the left
    and non-decreasing to the right of p, or None if there is none.
    """
    first_left, first_right = first.abs_slopes(p)
    second_left, second_right = second.abs_slopes(p)
    low, high = ZERO, None
    # second_left * w <= -first_left
    # second_right * w >= -first_right
    for coeff, bound, upper in (
        (second_left, -first_left, True),
        (second_right, -first_right, False),
    ):
        if coeff == 0:
            if (upper and bound < 0) or (not upper and bound > 0):
                return None
            continue
        limit = bound / coeff
        if (coeff > 0) == upper:
            high = limit if high is None else min(high, limit)
        else:
            low = max(low, limit)
    if high is not None and low > high:
        return None
    return low


def _is_increasing(curve: PwaFunction, p: Fraction) -> bool:
    left, right = curve.one_sided_slopes(p)
    return (left is None or left >= 0) and right is not None and right > 0


def _is_decreasing(curve: PwaFunction, p: Fraction) -> bool:
    left, right = curve.one_sided_slopes(p)
    return (right is None or right <= 0) and left is not None and left < 0


def _peaks_alone(curve: PwaFunction, p: Fraction) -> bool:
    left, right = curve.one_sided_slopes(p)
    return (left is None or left >= 0) and (right is None or right <= 0)


def verify_input(
    pair: ChannelPair, state: BlochVector, p_star_prime: Fraction, value: Fraction
) -> Tuple[bool, float]:
    """
    Check numerically that a state reaches the unassisted minimax risk.

    The maximum of the state's Bayes risk over a grid containing p'_* must
    equal R'_M, and the difference quotients at p'_* must bracket zero.

    Returns:
        (passed, deviation of the grid maximum from R'_M)
    """
    tolerance = get_settings().optimal_input_tolerance
    risk = bloch_risk_curve(pair, state)
    p = float(p_star_prime)
    grid = [k / 1000 for k in range(1001)] + [p]
    deviation = abs(max(risk(x) for x in grid) - float(value))
    step = DIFFERENCE_STEP
    left_quotient = (risk(p) - risk(p - step)) / step if p >= step else 0.0
    right_quotient = (risk(p + step) - risk(p)) / step if p <= 1 - step else 0.0
    flat = left_quotient >= -1e-6 and right_quotient <= 1e-6
    return deviation <= tolerance and flat, deviation


def solve_optimal_inputs(pair: ChannelPair) -> InputSolution:
    """
    Optimal unassisted input states together with the mixing data.

    Args:
        pair: Channel pair

    Returns:
        InputSolution with verified states

    Raises:
        ThreeWayCrossingError: three eigenstate curves meet at p'_* with mixed
            slopes; the verified candidates are attached
        InconsistentCrossingError: a crossing admits no non-negative weight
    """
    peak = minimax_no_ancilla(pair)
    p = peak.p_star
    curves = eigenstate_curves(pair)
    active = [axis for axis in AXIS_ORDER if curves[axis](p) == peak.value]

    for axis in active:
        if _peaks_alone(curves[axis], p):
            logger.debug(f"sigma_{axis.value} eigenstates peak at p'*={rat_render(p)}")
            return InputSolution(
                states=eigenstate_pair(axis), p_star_prime=p, axis=axis
            )

    coeffs = AbcdCoefficients.from_pair(pair)
    candidates: Dict[Crossing, Tuple[Fraction, List[BlochVector]]] = {}
    for crossing in CROSSING_PAIRS:
        first, second = crossing
        if first not in active or second not in active:
            continue
        opposite = (
            _is_increasing(curves[first], p) and _is_decreasing(curves[second], p)
        ) or (_is_decreasing(curves[first], p) and _is_increasing(curves[second], p))
        if not opposite:
            continue
        weight = _feasible_weight(coeffs.axis_form(first), coeffs.axis_form(second), p)
        if weight is None:
            raise InconsistentCrossingError(
                f"sigma_{first.value}/sigma_{second.value} crossing at "
                f"p'*={rat_render(p)} admits no mixing weight for {pair.describe()}"
            )
        states = [
            state
            for state in mixed_states(crossing, weight)
            if verify_input(pair, state, p, peak.value)[0]
        ]
        if states:
            candidates[crossing] = (weight, states)
        else:
            logger.warning(
                f"Mixed states for sigma_{first.value}/sigma_{second.value} at "
                f"tan^2={rat_render(weight)} failed verification"
            )

    if not candidates:
        raise InconsistentCrossingError(
            f"No verified optimal input at p'*={rat_render(p)} for {pair.describe()}"
        )
    if len(active) == 3:
        all_states = [state for _, states in candidates.values() for state in states]
        raise ThreeWayCrossingError(
            f"Three eigenstate curves meet at p'*={rat_render(p)}; "
            f"{len(all_states)} candidate states not proven complete",
            candidates=all_states,
        )
    crossing, (weight, states) = next(iter(candidates.items()))
    logger.debug(
        f"sigma_{crossing[0].value}/sigma_{crossing[1].value} crossing at "
        f"p'*={rat_render(p)} with tan^2={rat_render(weight)}"
    )
    return InputSolution(
        states=states, p_star_prime=p, crossing=crossing, mixing_weight=weight
    )


def optimal_input_no_ancilla(pair: ChannelPair) -> List[BlochVector]:
    """
    Optimal input states for minimax discrimination without ancilla.

    Identical channels return the eigenstates of sigma_z.
    """
    return solve_optimal_inputs(pair).states


def mixing_cos_squared(weight: Fraction) -> Fraction:
    """Exact cos^2 of the mixing angle from tan^2."""
    return ONE / (ONE + weight)

