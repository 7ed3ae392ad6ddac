"""
Unit tests for the exact Bayes risk curves and the Bloch-input risk.
"""

import math
import unittest
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.channels import make_pair
from src.core.exactnum import HALF, ONE, ZERO
from src.core.models import BlochVector, PauliAxis
from src.core.risk import (
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
from src.utils.random_pairs import random_bloch, random_pair

WORKED = make_pair(["0.3", "0.4", "0.2", "0.1"], ["0.1", "0.3", "0.15", "0.45"])
IDENTICAL = make_pair(["1/2", "1/4", "1/8", "1/8"], ["1/2", "1/4", "1/8", "1/8"])
PERFECT = make_pair(["0", "1/3", "1/3", "1/3"], ["1", "0", "0", "0"])

PRIORS = [Fraction(k, 20) for k in range(21)]

weights = st.lists(
    st.integers(min_value=0, max_value=12), min_size=4, max_size=4
).filter(
    lambda counts: sum(counts) > 0
)


def _distribution(counts):
    total = sum(counts)
    return [Fraction(count, total) for count in counts]


class TestEntangledRisk(unittest.TestCase):
    """Risk with a maximally entangled input."""

    def test_worked_example_peak(self):
        self.assertEqual(bayes_risk_entangled(WORKED)(Fraction(3, 7)), Fraction(5, 14))

    def test_worked_example_uniform_prior(self):
        self.assertEqual(bayes_risk_entangled(WORKED)(HALF), Fraction(13, 40))

    def test_identical_channels_give_tent(self):
        curve = bayes_risk_entangled(IDENTICAL)
        for p in PRIORS:
            self.assertEqual(curve(p), min(p, ONE - p))

    def test_endpoints_vanish(self):
        for pair in (WORKED, IDENTICAL, PERFECT):
            curve = bayes_risk_entangled(pair)
            self.assertEqual(curve(ZERO), ZERO)
            self.assertEqual(curve(ONE), ZERO)

    def test_perfect_discrimination_is_zero(self):
        self.assertEqual(
            bayes_risk_entangled(PERFECT).knots, ((ZERO, ZERO), (ONE, ZERO))
        )


class TestEigenstateRisk(unittest.TestCase):
    """Unassisted risk of Pauli eigenstate inputs."""

    def test_worked_example_at_worst_prior(self):
        curves = eigenstate_curves(WORKED)
        p = Fraction(3, 7)
        self.assertEqual(curves[PauliAxis.X](p), Fraction(5, 14))
        self.assertEqual(curves[PauliAxis.Y](p), Fraction(5, 14))
        self.assertEqual(curves[PauliAxis.Z](p), Fraction(3, 7))

    def test_z_eigenstates_blind_to_phase_flip(self):
        pair = make_pair([1, 0, 0, 0], [0, 0, 0, 1])
        curve = bayes_risk_eigenstate(pair, PauliAxis.Z)
        for p in PRIORS:
            self.assertEqual(curve(p), HALF * (1 - abs(2 * p - 1)))

    def test_identical_channels(self):
        for axis in PauliAxis:
            curve = bayes_risk_eigenstate(IDENTICAL, axis)
            self.assertEqual(curve(Fraction(1, 5)), Fraction(1, 5))


class TestNoAncillaRisk(unittest.TestCase):
    """Envelope of the eigenstate curves."""

    def test_worked_example(self):
        curve = bayes_risk_no_ancilla(WORKED)
        self.assertEqual(curve(Fraction(3, 7)), Fraction(5, 14))
        self.assertEqual(curve(HALF), Fraction(7, 20))
        self.assertIn(Fraction(3, 7), curve.abscissae)

    def test_perfect_family_positive_inside(self):
        curve = bayes_risk_no_ancilla(PERFECT)
        for p in PRIORS[1:-1]:
            self.assertGreater(curve(p), ZERO)
            self.assertEqual(curve(p), min(p / 3, ONE - p))

    def test_closed_form_matches_envelope(self):
        for pair in (WORKED, IDENTICAL, PERFECT):
            curve = bayes_risk_no_ancilla(pair)
            for p in PRIORS:
                self.assertEqual(curve(p), bayes_risk_no_ancilla_closed_form(pair, p))


class TestEntanglementNeeded(unittest.TestCase):
    """Sign of the product of the r_alpha."""

    def test_worked_example(self):
        self.assertFalse(bayes_entanglement_needed(WORKED, Fraction(3, 7)))
        self.assertTrue(bayes_entanglement_needed(WORKED, HALF))

    def test_identical_never(self):
        for p in PRIORS:
            self.assertFalse(bayes_entanglement_needed(IDENTICAL, p))

    def test_perfect_family(self):
        self.assertTrue(bayes_entanglement_needed(PERFECT, HALF))

    def test_optimal_bayes_axis(self):
        self.assertEqual(optimal_bayes_input(WORKED, HALF), PauliAxis.X)
        self.assertEqual(optimal_bayes_input(IDENTICAL, HALF), PauliAxis.Z)


class TestBlochRisk(unittest.TestCase):
    """Floating-point risk of general pure inputs."""

    def test_mixed_state_reaches_crossing_value(self):
        phi = math.atan(math.sqrt(2 / 5))
        state = BlochVector.from_angles(math.pi / 2, phi)
        self.assertAlmostEqual(
            bayes_risk_bloch(WORKED, 3 / 7, state), 5 / 14, places=12
        )

    def test_eigenstates_match_exact_curves(self):
        curves = eigenstate_curves(WORKED)
        for axis in PauliAxis:
            state = BlochVector.eigenstate(axis)
            for p in PRIORS:
                self.assertAlmostEqual(
                    bayes_risk_bloch(WORKED, float(p), state),
                    float(curves[axis](p)),
                    places=12,
                )

    def test_random_states_never_beat_eigenstates(self):
        rng = np.random.default_rng(2024)
        for _ in range(5):
            pair = random_pair(rng)
            for p in (Fraction(1, 5), HALF, Fraction(7, 9)):
                optimum = float(bayes_risk_no_ancilla(pair)(p))
                sampled = min(
                    bayes_risk_bloch(pair, float(p), random_bloch(rng))
                    for _ in range(2000)
                )
                self.assertGreaterEqual(sampled, optimum - 1e-9)
                eigen = min(
                    bayes_risk_bloch(pair, float(p), BlochVector.eigenstate(axis, sign))
                    for axis in PauliAxis
                    for sign in (1, -1)
                )
                self.assertAlmostEqual(eigen, optimum, delta=1e-12)

    def test_curve_rejects_prior_outside_interval(self):
        risk = bloch_risk_curve(WORKED, BlochVector.eigenstate(PauliAxis.Z))
        with pytest.raises(ValueError):
            risk(1.5)


@settings(max_examples=60, deadline=None)
@given(first=weights, second=weights)
def test_risk_ordering(first, second):
    pair = make_pair(_distribution(first), _distribution(second))
    entangled = bayes_risk_entangled(pair)
    unassisted = bayes_risk_no_ancilla(pair)
    assert entangled.is_concave and unassisted.is_concave
    for p in PRIORS:
        assert entangled(p) <= unassisted(p) <= min(p, ONE - p)
        assert unassisted(p) == bayes_risk_no_ancilla_closed_form(pair, p)
