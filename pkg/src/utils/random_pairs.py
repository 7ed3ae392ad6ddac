"""
Seeded random channel pairs, input states and priors for property checks.

Channel weights are multiples of 1/denominator drawn from a multinomial, so
ties between breakpoints and zero weights occur often enough to exercise the
degenerate configurations.
"""

import math
from fractions import Fraction
from typing import List, Optional

import numpy as np

from src.config import get_settings
from src.core.channels import ChannelPair, make_pair
from src.core.models import BlochVector


def random_weights(rng: np.random.Generator, denominator: int) -> List[Fraction]:
    counts = rng.multinomial(denominator, [0.25] * 4)
    return [Fraction(int(count), denominator) for count in counts]


def random_pair(
    rng: np.random.Generator, denominator: Optional[int] = None
) -> ChannelPair:
    """Two independent random Pauli channels with rational weights."""
    if denominator is None:
        denominator = get_settings().random_denominator
    return make_pair(random_weights(rng, denominator), random_weights(rng, denominator))


def perfect_discrimination_pair(
    rng: np.random.Generator, denominator: Optional[int] = None
) -> ChannelPair:
    """
    A channel with q_beta = 0 against the unitary sigma_beta.

    The other three weights of the first channel are strictly positive, so the
    pair is perfectly distinguishable with entanglement but not without.
    """
    if denominator is None:
        denominator = get_settings().random_denominator
    if denominator < 3:
        raise ValueError(f"Denominator {denominator} leaves no room for three weights")
    beta = int(rng.integers(0, 4))
    counts = rng.multinomial(denominator - 3, [1 / 3] * 3) + 1
    q1 = [Fraction(int(count), denominator) for count in counts]
    q1.insert(beta, Fraction(0))
    q2 = [Fraction(int(alpha == beta)) for alpha in range(4)]
    return make_pair(q1, q2)


def random_bloch(rng: np.random.Generator) -> BlochVector:
    """Uniformly distributed pure state on the Bloch sphere."""
    cos_theta = float(rng.uniform(-1.0, 1.0))
    phi = float(rng.uniform(0.0, 2 * math.pi))
    return BlochVector.from_angles(math.acos(cos_theta), phi)


def random_priors(rng: np.random.Generator, count: int) -> List[float]:
    return [float(value) for value in rng.uniform(0.0, 1.0, size=count)]
