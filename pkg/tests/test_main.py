"""
Tests for the command-line interface.
"""

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

from typer.testing import CliRunner

from src.core.channels import make_pair
from src.core.errors import NoConvergenceError
from src.core.pwa import PwaFunction
from src.core.risk import bayes_risk_entangled, bayes_risk_no_ancilla
from src.main import EXIT_INPUT, EXIT_INVARIANT, EXIT_OUTPUT, app

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
WORKED_FILE = DATA_DIR / "pairs" / "worked_example.json"
IDENTICAL_FILE = DATA_DIR / "pairs" / "identical_channels.json"

runner = CliRunner()


class TestAnalyzeCommand(unittest.TestCase):
    """analyze INPUT --format json|text"""

    def test_worked_example_json(self):
        result = runner.invoke(app, ["analyze", str(WORKED_FILE)])
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(result.stdout)
        self.assertEqual(report["R_M"], "5/14")
        self.assertEqual(report["R_M_prime"], "5/14")
        self.assertEqual(report["case"]["tag"], "T5_middle_double")
        self.assertEqual(len(report["optimal_inputs_no_ancilla"]), 4)
        self.assertAlmostEqual(report["floats"]["p_star"], 3 / 7)

    def test_identical_channels(self):
        result = runner.invoke(app, ["analyze", str(IDENTICAL_FILE)])
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(result.stdout)
        self.assertEqual(report["case"]["tag"], "Identical")
        self.assertEqual(report["R_M"], "1/2")

    def test_text_format(self):
        result = runner.invoke(app, ["analyze", str(WORKED_FILE), "--format", "text"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("T5_middle_double", result.output)
        self.assertIn("2/5", result.output)
        self.assertIn("Verdict: T5_middle_double", result.output)

    def test_curves_rebuild_from_report(self):
        result = runner.invoke(app, ["analyze", str(WORKED_FILE)])
        self.assertEqual(result.exit_code, 0, result.output)
        report = json.loads(result.stdout)
        pair = make_pair(["0.3", "0.4", "0.2", "0.1"], ["0.1", "0.3", "0.15", "0.45"])
        entangled = PwaFunction.from_json(report["curve_entangled"])
        unassisted = PwaFunction.from_json(report["curve_no_ancilla"])
        self.assertEqual(entangled, bayes_risk_entangled(pair))
        self.assertEqual(unassisted, bayes_risk_no_ancilla(pair))
        self.assertEqual(entangled(Fraction(3, 7)), Fraction(5, 14))
        self.assertEqual(unassisted(Fraction(3, 7)), Fraction(5, 14))
        self.assertEqual(report["curve_entangled"][1], ["1/4", "1/4"])

    def test_invalid_distribution_exits_with_input_error(self):
        document = {
            "channel1": {"q": ["0.3", "0.4", "0.2", "0.1"]},
            "channel2": {"q": ["0.1", "0.3", "0.15", "0.5"]},
        }
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.json"
            path.write_text(json.dumps(document), encoding="utf-8")
            result = runner.invoke(app, ["analyze", str(path)])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertIn("channel2", result.output)

    def test_malformed_json_reports_line(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.json"
            path.write_text("{\n\n  nope\n}", encoding="utf-8")
            result = runner.invoke(app, ["analyze", str(path)])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertIn(":3:", result.output)


class TestSweepCommand(unittest.TestCase):
    """sweep INPUT --points N --out PATH"""

    def test_writes_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "curves.csv"
            result = runner.invoke(
                app, ["sweep", str(WORKED_FILE), "--points", "2", "--out", str(out)]
            )
            self.assertEqual(result.exit_code, 0, result.output)
            lines = out.read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "p,R_B,RpB_x,RpB_y,RpB_z,RpB")
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[1], "0,0,0,0,0,0")

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "missing" / "curves.csv"
            result = runner.invoke(app, ["sweep", str(WORKED_FILE), "--out", str(out)])
        self.assertEqual(result.exit_code, EXIT_OUTPUT)

    def test_points_below_two(self):
        result = runner.invoke(
            app, ["sweep", str(WORKED_FILE), "--points", "1", "--out", "x.csv"]
        )
        self.assertEqual(result.exit_code, 2)


class TestVerifyCommand(unittest.TestCase):
    """verify --trials N --seed N --pair PATH"""

    def test_worked_pair(self):
        result = runner.invoke(
            app, ["verify", "--trials", "1", "--seed", "42", "--pair", str(WORKED_FILE)]
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("entangled_oracle", result.output)
        self.assertIn("Max observed deviation", result.output)

    def test_zero_trials_is_usage_error(self):
        result = runner.invoke(app, ["verify", "--trials", "0"])
        self.assertEqual(result.exit_code, 2)

    def test_selected_suite(self):
        result = runner.invoke(app, ["verify", "--trials", "2", "--suite", "structure"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("structure", result.output)
        self.assertNotIn("bloch_oracle", result.output)

    def test_unknown_suite_is_usage_error(self):
        result = runner.invoke(app, ["verify", "--trials", "1", "--suite", "nope"])
        self.assertEqual(result.exit_code, 2)


class TestStatesCommand(unittest.TestCase):
    """states INPUT"""

    def test_zero_against_plus(self):
        path = DATA_DIR / "states" / "zero_vs_plus.json"
        result = runner.invoke(app, ["states", str(path)])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("R_M = 0.1464466", result.output)
        self.assertIn("B1 =", result.output)

    def test_rejects_non_density_matrix(self):
        document = {
            "rho1": [[[2.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
            "rho2": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
        }
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "states.json"
            path.write_text(json.dumps(document), encoding="utf-8")
            result = runner.invoke(app, ["states", str(path)])
        self.assertEqual(result.exit_code, EXIT_INPUT)

    def test_search_failure_exits_with_invariant_error(self):
        path = DATA_DIR / "states" / "zero_vs_plus.json"
        with patch(
            "src.main.minimax_states", side_effect=NoConvergenceError("no bracket")
        ):
            result = runner.invoke(app, ["states", str(path)])
        self.assertEqual(result.exit_code, EXIT_INVARIANT)
        self.assertIn("Analysis failed", result.output)


class TestBatchCommand(unittest.TestCase):
    """batch DIR --out-dir DIR"""

    def test_writes_one_report_per_pair(self):
        with tempfile.TemporaryDirectory() as tmp:
            result = runner.invoke(
                app,
                ["batch", str(DATA_DIR / "pairs"), "--out-dir", tmp, "--workers", "2"],
            )
            self.assertEqual(result.exit_code, 0, result.output)
            written = sorted(path.name for path in Path(tmp).iterdir())
            worked = json.loads(
                (Path(tmp) / "worked_example.report.json").read_text(encoding="utf-8")
            )
        self.assertEqual(
            written,
            [
                "identical_channels.report.json",
                "perfect_discrimination.report.json",
                "worked_example.report.json",
            ],
        )
        self.assertEqual(worked["R_M"], "5/14")
        self.assertEqual(worked["label"], "worked example")

    def test_missing_directory(self):
        result = runner.invoke(app, ["batch", "no/such/dir", "--out-dir", "out"])
        self.assertEqual(result.exit_code, EXIT_INPUT)


class TestUnitaryCommand(unittest.TestCase):
    """unitary --eigenvalue RE,IM ... --prior P"""

    def test_chord(self):
        result = runner.invoke(app, ["unitary", "-e", "1,0", "-e", "0,1"])
        self.assertEqual(result.exit_code, 0, result.output)
        payload = json.loads(result.stdout)
        self.assertAlmostEqual(payload["minimax_risk"], 0.1464466094067262, places=12)
        self.assertEqual(payload["prior"], 0.5)

    def test_malformed_eigenvalue(self):
        result = runner.invoke(app, ["unitary", "-e", "one"])
        self.assertEqual(result.exit_code, 2)

    def test_off_circle_eigenvalue(self):
        result = runner.invoke(app, ["unitary", "-e", "2,0"])
        self.assertEqual(result.exit_code, EXIT_INPUT)
