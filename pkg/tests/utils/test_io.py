"""
Unit tests for reading pair and state files and atomic writes.
"""

import json
import os
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

import pytest

from src.core.channels import make_pair
from src.core.errors import InputFileError
from src.utils.io import (
    load_pair_file,
    load_state_file,
    pair_to_file,
    read_json,
    write_atomic,
)

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


class TestPairFiles(unittest.TestCase):
    """Channel-pair documents."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        return path

    def test_loads_worked_example(self):
        spec, pair = load_pair_file(DATA_DIR / "pairs" / "worked_example.json")
        self.assertEqual(spec.label, "worked example")
        self.assertEqual(
            [entry.p_alpha for entry in pair.breakpoints],
            [Fraction(1, 4), Fraction(3, 7), Fraction(3, 7), Fraction(9, 11)],
        )

    def test_malformed_json_reports_line(self):
        text = '{\n  "channel1": {"q": [1, 0, 0, 0]},\n  oops\n}'
        path = self._write("broken.json", text)
        with pytest.raises(InputFileError) as info:
            load_pair_file(path)
        self.assertEqual(info.value.line, 3)
        self.assertIn("broken.json:3:", str(info.value))

    def test_sum_not_one_names_channel(self):
        document = {
            "channel1": {"q": ["0.3", "0.4", "0.2", "0.1"]},
            "channel2": {"q": ["0.1", "0.3", "0.15", "0.5"]},
        }
        path = self._write("bad_sum.json", json.dumps(document))
        with pytest.raises(InputFileError) as info:
            load_pair_file(path)
        self.assertIn("channel2", str(info.value))

    def test_invalid_channel_reports_its_line(self):
        document = {
            "label": "bad",
            "channel1": {"q": ["0.3", "0.4", "0.2", "0.1"]},
            "channel2": {"q": ["0.1", "0.3", "0.15", "0.5"]},
        }
        path = self._write("bad_line.json", json.dumps(document, indent=2))
        with pytest.raises(InputFileError) as info:
            load_pair_file(path)
        self.assertEqual(info.value.line, 11)
        self.assertIn("bad_line.json:11:", str(info.value))

    def test_schema_violation_reports_its_line(self):
        text = '{\n  "label": "short",\n  "channel1": {"q": ["1"]}\n}'
        with pytest.raises(InputFileError) as info:
            load_pair_file(self._write("short_line.json", text))
        self.assertEqual(info.value.line, 3)

    def test_schema_violation(self):
        path = self._write("short.json", json.dumps({"channel1": {"q": ["1"]}}))
        with pytest.raises(InputFileError) as info:
            load_pair_file(path)
        self.assertIn("channel1.q", str(info.value))

    def test_zero_denominator(self):
        document = {
            "channel1": {"q": ["1/0", "0", "0", "0"]},
            "channel2": {"q": ["1", "0", "0", "0"]},
        }
        with pytest.raises(InputFileError):
            load_pair_file(self._write("zero.json", json.dumps(document)))

    def test_missing_file(self):
        with pytest.raises(InputFileError) as info:
            read_json(self.dir / "absent.json")
        self.assertIsNone(info.value.line)

    def test_pair_to_file_reproduces_pair(self):
        pair = make_pair(["1/2", "1/4", "1/8", "1/8"], ["0", "0", "0", "1"])
        document = pair_to_file(pair, label="failure")
        path = self._write("again.json", document.model_dump_json())
        _, loaded = load_pair_file(path)
        self.assertEqual(loaded, pair)


class TestStateFiles(unittest.TestCase):
    """Density-matrix documents."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_loads_sample(self):
        spec, rho1, rho2 = load_state_file(DATA_DIR / "states" / "zero_vs_plus.json")
        self.assertEqual(rho1.dim, 2)
        self.assertAlmostEqual(rho2.trace, 1.0)
        self.assertIsNotNone(spec.label)

    def test_rejects_non_density_matrix(self):
        document = {
            "rho1": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
            "rho2": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
        }
        path = self.dir / "trace_two.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        with pytest.raises(InputFileError) as info:
            load_state_file(path)
        self.assertIn("rho1", str(info.value))

    def test_rejects_non_hermitian(self):
        document = {
            "rho1": [[[0.5, 0.0], [0.5, 0.0]], [[0.0, 0.0], [0.5, 0.0]]],
            "rho2": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]],
        }
        path = self.dir / "skew.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        with pytest.raises(InputFileError):
            load_state_file(path)


class TestWriteAtomic(unittest.TestCase):
    """Temporary file plus rename."""

    def test_writes_and_leaves_no_temporaries(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "out.txt"
            write_atomic(target, "a\nb\n")
            write_atomic(target, "c\n")
            self.assertEqual(target.read_bytes(), b"c\n")
            self.assertEqual(os.listdir(tmp), ["out.txt"])

    def test_missing_directory(self):
        with tempfile.TemporaryDirectory() as tmp:
            with pytest.raises(OSError):
                write_atomic(Path(tmp) / "missing" / "out.txt", "x")
