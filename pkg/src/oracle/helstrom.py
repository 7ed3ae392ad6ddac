"""
Helstrom measurements, Bayes risk and minimax discrimination of two states.

For priors (p, 1 - p) the optimal measurement projects onto the positive part
of M = p rho1 - (1 - p) rho2, and its Bayes risk is 1/2 (1 - ||M||_1). The
kernel of M may be split between the two outcomes; choosing that split so the
two error probabilities coincide at the worst prior gives a minimax measurement.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from src.config import get_settings
from src.oracle.linalg import HermitianMatrix, eigh, spectral_projector, trace_norm

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True, eq=False)
class Povm2:
    """Two-outcome measurement; B1 reports channel/state 1."""

    B1: HermitianMatrix
    B2: HermitianMatrix

    def is_valid(self, positivity: float = 1e-9, completeness: float = 1e-12) -> bool:
        """Both effects positive semidefinite and summing to the identity."""
        identity = np.eye(self.B1.dim)
        total = self.B1.entries + self.B2.entries
        if float(np.max(np.abs(total - identity))) > completeness:
            return False
        return all(eigh(effect)[0][-1] >= -positivity for effect in (self.B1, self.B2))

    def error_probabilities(
        self, rho1: HermitianMatrix, rho2: HermitianMatrix
    ) -> Tuple[float, float]:
        """(Tr[rho1 B2], Tr[rho2 B1])."""
        return rho1.expectation(self.B2), rho2.expectation(self.B1)

    def bayes_risk(
        self, rho1: HermitianMatrix, rho2: HermitianMatrix, p: float
    ) -> float:
        miss1, miss2 = self.error_probabilities(rho1, rho2)
        return p * miss1 + (1 - p) * miss2

    def equalization_residual(
        self, rho1: HermitianMatrix, rho2: HermitianMatrix
    ) -> float:
        miss1, miss2 = self.error_probabilities(rho1, rho2)
        return abs(miss1 - miss2)


@dataclass(frozen=True, eq=False)
class MinimaxResult:
    """Outcome of the minimax search over priors for two states."""

    value: float
    p_star: float
    povm: Povm2
    residual: float


def _check_prior(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Prior {p} outside [0, 1]")


def helstrom_operator(
    rho1: HermitianMatrix, rho2: HermitianMatrix, p: float
) -> HermitianMatrix:
    _check_prior(p)
    if rho1.dim != rho2.dim:
        raise ValueError(f"Dimension mismatch: {rho1.dim} vs {rho2.dim}")
    return rho1.scaled(p) - rho2.scaled(1 - p)


def helstrom_risk(rho1: HermitianMatrix, rho2: HermitianMatrix, p: float) -> float:
    """
    Minimum Bayes risk for discriminating two states.

    Args:
        rho1: State under hypothesis 1
        rho2: State under hypothesis 2
        p: Prior of hypothesis 1

    Returns:
        1/2 (1 - ||p rho1 - (1 - p) rho2||_1)
    """
    return 0.5 * (1.0 - trace_norm(helstrom_operator(rho1, rho2, p)))


def _spectral_split(
    operator: HermitianMatrix, kernel_tolerance: Optional[float]
) -> Tuple[np.ndarray, np.ndarray]:
    values, vectors = eigh(operator)
    if kernel_tolerance is None:
        scale = float(np.max(np.abs(values)))
        kernel_tolerance = get_settings().kernel_relative_tolerance * scale
    positive = values > kernel_tolerance
    kernel = np.abs(values) <= kernel_tolerance
    return spectral_projector(vectors, positive), spectral_projector(vectors, kernel)


def solve_equalizer_weight(
    rho1: HermitianMatrix,
    rho2: HermitianMatrix,
    p: float,
    kernel_tolerance: Optional[float] = None,
) -> float:
    """
    Kernel weight lambda in [0, 1] that equalizes the two error probabilities.

    With B1 = P+ + lambda P0 the condition Tr[rho1 B2] = Tr[rho2 B1] is linear
    in lambda. The solution is clipped to [0, 1]; an empty kernel gives 0.
    """
    positive, kernel = _spectral_split(
        helstrom_operator(rho1, rho2, p), kernel_tolerance
    )
    r1, r2 = rho1.entries, rho2.entries
    numerator = 1.0 - np.trace(r1 @ positive).real - np.trace(r2 @ positive).real
    denominator = np.trace(r1 @ kernel).real + np.trace(r2 @ kernel).real
    if denominator <= 0.0:
        return 0.0
    return float(min(1.0, max(0.0, numerator / denominator)))


def helstrom_povm(
    rho1: HermitianMatrix,
    rho2: HermitianMatrix,
    p: float,
    equalizer_weight: Optional[float] = None,
    kernel_tolerance: Optional[float] = None,
) -> Povm2:
    """
    Bayes-optimal measurement B1 = P+ + lambda P0, B2 = I - B1.

    Args:
        rho1: State under hypothesis 1
        rho2: State under hypothesis 2
        p: Prior of hypothesis 1
        equalizer_weight: Share lambda of the kernel assigned to B1 (0 if omitted)
        kernel_tolerance: Absolute eigenvalue threshold for the kernel; relative
            to the operator norm when omitted

    Returns:
        Povm2 reaching helstrom_risk at this prior
    """
    weight = 0.0 if equalizer_weight is None else equalizer_weight
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"Equalizer weight {weight} outside [0, 1]")
    positive, kernel = _spectral_split(
        helstrom_operator(rho1, rho2, p), kernel_tolerance
    )
    b1 = positive + weight * kernel
    b2 = np.eye(rho1.dim) - b1
    return Povm2(HermitianMatrix(b1), HermitianMatrix(b2))


def golden_section_max(
    objective: Callable[[float], float], low: float, high: float, tolerance: float
) -> float:
    """Maximizer of a concave function on [low, high] to within tolerance."""
    a, b = low, high
    c = b - GOLDEN_RATIO * (b - a)
    d = a + GOLDEN_RATIO * (b - a)
    fc, fd = objective(c), objective(d)
    while b - a > tolerance:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN_RATIO * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN_RATIO * (b - a)
            fd = objective(d)
    candidates = [(objective(x), x) for x in (a, (a + b) / 2, b)]
    return max(candidates)[1]


def minimax_states(rho1: HermitianMatrix, rho2: HermitianMatrix) -> MinimaxResult:
    """
    Minimax discrimination of two states.

    The worst prior maximizes the concave Bayes risk; at that prior the
    kernel weight is solved so the measurement equalizes both errors.

    Args:
        rho1: State under hypothesis 1
        rho2: State under hypothesis 2

    Returns:
        MinimaxResult with the minimax risk, worst prior, equalizer POVM and
        the residual |Tr[rho1 B2] - Tr[rho2 B1]|
    """
    settings = get_settings()
    p_star = golden_section_max(
        lambda p: helstrom_risk(rho1, rho2, p),
        0.0,
        1.0,
        settings.golden_section_tolerance,
    )
    value = helstrom_risk(rho1, rho2, p_star)
    tolerance = settings.equalizer_kernel_tolerance
    weight = solve_equalizer_weight(rho1, rho2, p_star, tolerance)
    povm = helstrom_povm(rho1, rho2, p_star, weight, tolerance)
    residual = povm.equalization_residual(rho1, rho2)
    logger.debug(
        f"Minimax states: R_M={value:.12g} at p*={p_star:.12g}, "
        f"lambda={weight:.6g}, residual={residual:.3e}"
    )
    return MinimaxResult(value=value, p_star=p_star, povm=povm, residual=residual)
