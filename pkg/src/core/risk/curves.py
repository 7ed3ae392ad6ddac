"""
Bayes risk curves for discriminating two Pauli channels.

With a maximally entangled input the optimal Bayes risk is
1/2 (1 - sum_alpha |r_alpha(p)|). Without an ancilla, an eigenstate of one
Pauli matrix is Bayes optimal, and the risk is the minimum over the three axes
of 1/2 (1 - |r_i + r_j| - |r_k + r_l|) for the matching index pairing. All of
these curves are exact piecewise-affine functions of the prior. The risk of a
general Bloch input contains a square root and is evaluated in floating point.

Pauli indices are always the original (I, X, Y, Z) order here; the sorted
breakpoint order only matters for the minimax classification.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple

from src.core.channels import AffineForm, ChannelPair, r_forms, r_vector
from src.core.exactnum import HALF, ZERO
from src.core.models import BlochVector, PauliAxis
from src.core.pwa import PwaFunction, pwa_from_abs_terms, pwa_min

logger = logging.getLogger(__name__)

# Index pairings whose sums appear in the eigenstate risk of each axis
AXIS_PAIRINGS: Dict[PauliAxis, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    PauliAxis.Z: ((0, 3), (1, 2)),
    PauliAxis.X: ((0, 1), (2, 3)),
    PauliAxis.Y: ((0, 2), (1, 3)),
}

# Order in which ties between axes are resolved
AXIS_ORDER = (PauliAxis.Z, PauliAxis.X, PauliAxis.Y)


@dataclass(frozen=True)
class AbcdCoefficients:
    """a = r0 + r3, b = r1 + r2, c = r0 - r3, d = r1 - r2 as affine forms of p."""

    a: AffineForm
    b: AffineForm
    c: AffineForm
    d: AffineForm

    @classmethod
    def from_pair(cls, pair: ChannelPair) -> "AbcdCoefficients":
        r0, r1, r2, r3 = r_forms(pair)
        return cls(a=r0 + r3, b=r1 + r2, c=r0 - r3, d=r1 - r2)

    def axis_form(self, axis: PauliAxis) -> AffineForm:
        """The form whose absolute value sets the eigenstate risk of an axis."""
        if axis is PauliAxis.Z:
            return self.a - self.b
        if axis is PauliAxis.X:
            return self.c + self.d
        return self.c - self.d


def _abs_term(form: AffineForm) -> Tuple[Fraction, Fraction]:
    # |slope * p + intercept| = slope * |p - root| for slope > 0
    return form.slope, form.root


def bayes_risk_entangled(pair: ChannelPair) -> PwaFunction:
    """
    Optimal Bayes risk with a maximally entangled input, as an exact curve.

    Args:
        pair: Channel pair

    Returns:
        p -> 1/2 (1 - sum_alpha |r_alpha(p)|) with kinks at the breakpoints
    """
    terms = [(entry.t_alpha, entry.p_alpha) for entry in pair.breakpoints]
    return pwa_from_abs_terms(terms, HALF)


def bayes_risk_eigenstate(pair: ChannelPair, axis: PauliAxis) -> PwaFunction:
    """
    Bayes risk when an eigenstate of one Pauli matrix is sent without ancilla.

    Args:
        pair: Channel pair
        axis: Which Pauli matrix the input is an eigenstate of

    Returns:
        p -> 1/2 (1 - |r_i + r_j| - |r_k + r_l|) for the axis pairing
    """
    forms = r_forms(pair)
    terms = []
    for i, j in AXIS_PAIRINGS[axis]:
        combined = forms[i] + forms[j]
        if combined.slope != 0:
            terms.append(_abs_term(combined))
    return pwa_from_abs_terms(terms, HALF)


def eigenstate_curves(pair: ChannelPair) -> Dict[PauliAxis, PwaFunction]:
    return {axis: bayes_risk_eigenstate(pair, axis) for axis in AXIS_ORDER}


def bayes_risk_no_ancilla(pair: ChannelPair) -> PwaFunction:
    """Optimal unassisted Bayes risk: the minimum of the three eigenstate curves."""
    return pwa_min(list(eigenstate_curves(pair).values()))


def bayes_risk_no_ancilla_closed_form(pair: ChannelPair, p: Fraction) -> Fraction:
    """
    Pointwise unassisted Bayes risk from the sign pattern of the r_alpha.

    The best pairing reaches sum |r_alpha| unless the product of the r_alpha is
    negative, in which case it falls short by twice the smallest |r_alpha|.
    """
    r = r_vector(pair, p)
    total = sum((abs(value) for value in r), ZERO)
    if _product(r) < 0:
        total -= 2 * min(abs(value) for value in r)
    return HALF * (1 - total)


def _product(values) -> Fraction:
    result = Fraction(1)
    for value in values:
        result *= value
    return result


def bloch_risk_curve(pair: ChannelPair, state: BlochVector) -> Callable[[float], float]:
    """
    Float risk curve p -> R'_B(p, n) for a fixed input state.

    The exact coefficients are converted once, so the returned function is
    cheap enough for dense grids.
    """
    coeffs = AbcdCoefficients.from_pair(pair)
    a, b, c, d = (
        (float(form.slope), float(form.intercept))
        for form in (coeffs.a, coeffs.b, coeffs.c, coeffs.d)
    )
    cos2 = math.cos(state.theta) ** 2
    sin2 = math.sin(state.theta) ** 2
    cos_2phi = math.cos(2 * state.phi)

    def risk(p: float) -> float:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"Prior {p} outside [0, 1]")
        av, bv = a[0] * p + a[1], b[0] * p + b[1]
        cv, dv = c[0] * p + c[1], d[0] * p + d[1]
        radicand = cos2 * (av - bv) ** 2 + sin2 * (
            cv * cv + dv * dv + 2 * cv * dv * cos_2phi
        )
        return 0.5 * (1.0 - max(abs(av + bv), math.sqrt(max(radicand, 0.0))))

    return risk


def bayes_risk_bloch(pair: ChannelPair, p: float, state: BlochVector) -> float:
    """
    Bayes risk for an arbitrary pure input state without ancilla.

    Args:
        pair: Channel pair
        p: Prior of channel 1, in [0, 1]
        state: Input Bloch vector

    Returns:
        1/2 (1 - max{|a+b|, sqrt(cos^2 t (a-b)^2 + sin^2 t (c^2 + d^2 + 2cd cos 2f))})
    """
    return bloch_risk_curve(pair, state)(p)


def bayes_entanglement_needed(pair: ChannelPair, p: Fraction) -> bool:
    """
    Whether an ancilla strictly lowers the Bayes risk at prior p.

    True exactly when the product of the r_alpha(p) is negative; otherwise an
    eigenstate input already reaches sum |r_alpha|.
    """
    return _product(r_vector(pair, p)) < 0


def optimal_bayes_input(pair: ChannelPair, p: Fraction) -> PauliAxis:
    """Axis whose eigenstate gives the lowest unassisted Bayes risk at p."""
    curves = eigenstate_curves(pair)
    return min(AXIS_ORDER, key=lambda axis: (curves[axis](p), AXIS_ORDER.index(axis)))
