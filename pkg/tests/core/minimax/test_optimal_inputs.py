"""
Unit tests for the optimal single-qubit inputs without ancilla.
"""

import math
import unittest
from fractions import Fraction

from src.core.channels import make_pair
from src.core.minimax import (
    minimax_no_ancilla,
    optimal_input_no_ancilla,
    solve_optimal_inputs,
)
from src.core.minimax.optimal_inputs import (
    CROSSING_PAIRS,
    eigenstate_pair,
    mixed_states,
    mixing_cos_squared,
    verify_input,
)
from src.core.models import BlochVector, PauliAxis

WORKED = make_pair(["0.3", "0.4", "0.2", "0.1"], ["0.1", "0.3", "0.15", "0.45"])


class TestWorkedExample(unittest.TestCase):
    """sigma_x / sigma_y crossing at the worst prior 3/7."""

    def setUp(self):
        self.solution = solve_optimal_inputs(WORKED)

    def test_crossing_and_exact_weight(self):
        self.assertEqual(self.solution.crossing, (PauliAxis.X, PauliAxis.Y))
        self.assertEqual(self.solution.mixing_weight, Fraction(2, 5))
        self.assertEqual(self.solution.p_star_prime, Fraction(3, 7))
        self.assertIsNone(self.solution.axis)

    def test_four_states_in_equatorial_plane(self):
        states = self.solution.states
        self.assertEqual(len(states), 4)
        expected = {
            (sx * math.sqrt(5 / 7), sy * math.sqrt(2 / 7))
            for sx in (1, -1)
            for sy in (1, -1)
        }
        found = set()
        for state in states:
            nx, ny, nz = state.n
            self.assertAlmostEqual(nz, 0.0, places=12)
            match = min(expected, key=lambda v: abs(v[0] - nx) + abs(v[1] - ny))
            self.assertAlmostEqual(nx, match[0], places=12)
            self.assertAlmostEqual(ny, match[1], places=12)
            found.add(match)
        self.assertEqual(found, expected)

    def test_states_reach_minimax_risk(self):
        peak = minimax_no_ancilla(WORKED)
        for state in self.solution.states:
            ok, deviation = verify_input(WORKED, state, peak.p_star, peak.value)
            self.assertTrue(ok)
            self.assertLess(deviation, 1e-12)

    def test_eigenstates_are_not_optimal(self):
        peak = minimax_no_ancilla(WORKED)
        for axis in PauliAxis:
            ok, _ = verify_input(
                WORKED, BlochVector.eigenstate(axis), peak.p_star, peak.value
            )
            self.assertFalse(ok)


class TestEigenstateSolutions(unittest.TestCase):
    """Cases where one eigenstate curve peaks on its own."""

    def test_identical_channels_use_z(self):
        pair = make_pair(["1/2", "1/4", "1/8", "1/8"], ["1/2", "1/4", "1/8", "1/8"])
        solution = solve_optimal_inputs(pair)
        self.assertEqual(solution.axis, PauliAxis.Z)
        self.assertIsNone(solution.mixing_weight)
        self.assertEqual(
            [state.n for state in solution.states],
            [state.n for state in eigenstate_pair(PauliAxis.Z)],
        )

    def test_perfect_family(self):
        pair = make_pair(["0", "1/3", "1/3", "1/3"], ["1", "0", "0", "0"])
        states = optimal_input_no_ancilla(pair)
        self.assertEqual(len(states), 2)
        peak = minimax_no_ancilla(pair)
        for state in states:
            self.assertTrue(verify_input(pair, state, peak.p_star, peak.value)[0])


class TestMixedStates(unittest.TestCase):
    """Sign variants of the superposition."""

    def test_cos_squared(self):
        self.assertEqual(mixing_cos_squared(Fraction(2, 5)), Fraction(5, 7))
        self.assertEqual(mixing_cos_squared(Fraction(0)), Fraction(1))

    def test_zero_weight_collapses_to_first_axis(self):
        states = mixed_states((PauliAxis.Z, PauliAxis.X), Fraction(0))
        self.assertEqual(len(states), 2)
        self.assertEqual({round(state.n[2]) for state in states}, {1, -1})

    def test_four_variants_for_every_crossing(self):
        for crossing in CROSSING_PAIRS:
            with self.subTest(crossing=crossing):
                states = mixed_states(crossing, Fraction(1))
                self.assertEqual(len(states), 4)

    def test_z_y_crossing_lies_in_yz_plane(self):
        for state in mixed_states((PauliAxis.Z, PauliAxis.Y), Fraction(1, 3)):
            self.assertAlmostEqual(state.n[0], 0.0, places=12)
            self.assertAlmostEqual(state.n[2] ** 2, 0.75, places=12)
