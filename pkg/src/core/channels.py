"""
Pauli channels and the breakpoint data of a channel pair.

A qubit Pauli channel applies sigma_alpha rho sigma_alpha with probability q_alpha
for alpha in (I, X, Y, Z). For a pair of channels and a prior p on the first one,
every weight difference r_alpha(p) = p * t_alpha - q2_alpha is an affine function
of p with slope t_alpha = q1_alpha + q2_alpha, vanishing at the breakpoint
p_alpha = q2_alpha / t_alpha. The sorted breakpoints drive all of the minimax
analysis.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from src.core.errors import InvalidDistributionError
from src.core.exactnum import ONE, ZERO, check_width, rat_parse, rat_render

logger = logging.getLogger(__name__)

RationalLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class AffineForm:
    """Exact affine function p -> slope * p + intercept."""

    slope: Fraction
    intercept: Fraction

    def __call__(self, p: Fraction) -> Fraction:
        return self.slope * p + self.intercept

    def at_float(self, p: float) -> float:
        return float(self.slope) * p + float(self.intercept)

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.slope + other.slope, self.intercept + other.intercept)

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.slope - other.slope, self.intercept - other.intercept)

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.slope, -self.intercept)

    @property
    def root(self) -> Optional[Fraction]:
        """Zero of the form, or None when the slope vanishes."""
        if self.slope == 0:
            return None
        return -self.intercept / self.slope

    def abs_slopes(self, p: Fraction) -> Tuple[Fraction, Fraction]:
        """Left and right derivatives of |form| at p."""
        value = self(p)
        if value > 0:
            return self.slope, self.slope
        if value < 0:
            return -self.slope, -self.slope
        return -abs(self.slope), abs(self.slope)


@dataclass(frozen=True)
class PauliChannel:
    """Probabilities (q_0, q_1, q_2, q_3) of applying I, X, Y, Z."""

    q: Tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        _validate_distribution(self.q, None)

    @classmethod
    def from_values(
        cls, values: Sequence[RationalLike], name: Optional[str] = None
    ) -> "PauliChannel":
        """Build a channel from fractions, integers or "a/b"/decimal strings."""
        q = tuple(_coerce(value) for value in values)
        _validate_distribution(q, name)
        return cls(q)

    def render(self) -> List[str]:
        return [rat_render(value) for value in self.q]


@dataclass(frozen=True)
class BreakpointEntry:
    """
    One Pauli index of a pair: its slope t_alpha and breakpoint p_alpha.

    p_alpha is None (degenerate) exactly when t_alpha is zero, in which case
    r_alpha vanishes identically and the index contributes nothing.
    """

    original_index: int
    t_alpha: Fraction
    p_alpha: Optional[Fraction]

    @property
    def is_degenerate(self) -> bool:
        return self.p_alpha is None


@dataclass(frozen=True)
class ChannelPair:
    """Two Pauli channels plus their breakpoint entries sorted by p_alpha."""

    ch1: PauliChannel
    ch2: PauliChannel
    sorted: Tuple[BreakpointEntry, ...]

    @property
    def breakpoints(self) -> Tuple[BreakpointEntry, ...]:
        """Non-degenerate entries in ascending p_alpha order."""
        return tuple(entry for entry in self.sorted if not entry.is_degenerate)

    @property
    def degenerate_indices(self) -> Tuple[int, ...]:
        return tuple(e.original_index for e in self.sorted if e.is_degenerate)

    @property
    def slopes(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """t_alpha in original Pauli order."""
        return tuple(q1 + q2 for q1, q2 in zip(self.ch1.q, self.ch2.q))

    @property
    def is_identical(self) -> bool:
        return self.ch1.q == self.ch2.q

    def swapped(self) -> "ChannelPair":
        """The same pair with the channels exchanged (prior p becomes 1 - p)."""
        return make_pair(self.ch2.q, self.ch1.q)

    def describe(self) -> str:
        return f"q1={self.ch1.render()} q2={self.ch2.render()}"


def _coerce(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return check_width(value)
    return rat_parse(value)


def _validate_distribution(q: Sequence[Fraction], name: Optional[str]) -> None:
    label = name or "channel"
    if len(q) != 4:
        raise InvalidDistributionError(
            f"{label}: expected 4 Pauli weights, got {len(q)}", channel=name
        )
    for alpha, value in enumerate(q):
        if value < 0:
            raise InvalidDistributionError(
                f"{label}: weight q_{alpha} = {rat_render(value)} is negative",
                channel=name,
            )
    total = sum(q, ZERO)
    if total != ONE:
        raise InvalidDistributionError(
            f"{label}: weights sum to {rat_render(total)}, not 1", channel=name
        )


def make_pair(
    q1: Sequence[RationalLike], q2: Sequence[RationalLike]
) -> ChannelPair:
    """
    Validate two Pauli probability vectors and derive the sorted breakpoints.

    Args:
        q1: Weights of channel 1 for (I, X, Y, Z)
        q2: Weights of channel 2 for (I, X, Y, Z)

    Returns:
        ChannelPair whose entries are ascending in p_alpha (ties by original
        index) with degenerate entries (t_alpha = 0) placed last

    Raises:
        InvalidDistributionError: a weight is negative or a vector does not sum to 1
    """
    ch1 = PauliChannel.from_values(q1, name="channel1")
    ch2 = PauliChannel.from_values(q2, name="channel2")

    entries = []
    for alpha in range(4):
        t_alpha = check_width(ch1.q[alpha] + ch2.q[alpha])
        p_alpha = None if t_alpha == 0 else check_width(ch2.q[alpha] / t_alpha)
        entries.append(BreakpointEntry(alpha, t_alpha, p_alpha))

    regular = sorted(
        (e for e in entries if not e.is_degenerate),
        key=lambda e: (e.p_alpha, e.original_index),
    )
    degenerate = [e for e in entries if e.is_degenerate]
    if degenerate:
        logger.debug(
            f"Degenerate Pauli indices {[e.original_index for e in degenerate]} "
            "dropped from the breakpoint list"
        )
    return ChannelPair(ch1, ch2, tuple(regular + degenerate))


def r_forms(pair: ChannelPair) -> Tuple[AffineForm, ...]:
    """r_alpha as exact affine forms in the prior, original Pauli order."""
    return tuple(
        AffineForm(q1 + q2, -q2) for q1, q2 in zip(pair.ch1.q, pair.ch2.q)
    )


def r_vector(pair: ChannelPair, p: Fraction) -> Tuple[Fraction, ...]:
    """
    Evaluate r_alpha = p * (q1_alpha + q2_alpha) - q2_alpha for every alpha.

    Args:
        pair: Channel pair
        p: Prior of channel 1, in [0, 1]

    Returns:
        Four exact values in original Pauli order
    """
    p = Fraction(p)
    if not ZERO <= p <= ONE:
        raise ValueError(f"Prior {rat_render(p)} outside [0, 1]")
    return tuple(check_width(form(p)) for form in r_forms(pair))
