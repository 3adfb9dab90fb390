"""Tests for the workbench command line."""

import io
import json
import unittest
from unittest.mock import patch

from config.tests.fixtures import example_path
from src.cli.base import EXIT_FAILED, EXIT_INPUT, EXIT_OK, CommandResult
from src.cli.output import render
from src.main import Workbench, main


class TestFrameCommands(unittest.TestCase):
    """Tests for the frame verbs."""

    def setUp(self):
        """Set up test fixtures."""
        self.workbench = Workbench()
        self.frame = str(example_path("frame_three_point.json"))

    def test_check_frame(self):
        """Test a valid frame reports its loops and roots."""
        result = self.workbench.run(["check-frame", self.frame])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.lines[0], "valid")
        self.assertIn("reflexive: {y}", result.lines)
        self.assertIn("z-roots: {x}", result.lines)
        self.assertTrue(result.payload["success"])

    def test_check_frame_invalid(self):
        """Test an invalid frame exits with a negative answer."""
        result = self.workbench.run(["check-frame", str(example_path("two_cycle.json"))])
        self.assertEqual(result.exit_code, EXIT_FAILED)
        self.assertEqual(result.lines[0], "invalid")
        self.assertFalse(result.payload["valid"])

    def test_clop(self):
        """Test the upset algebra of the three-point frame."""
        result = self.workbench.run(["clop", self.frame])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload["element_upsets"], [[], [2], [1, 2], [0, 1, 2]])
        self.assertEqual(result.payload["algebra"]["box"], [1, 1, 3, 3])

    def test_clop_refuses_invalid_frame(self):
        """Test dual constructions need a valid frame."""
        result = self.workbench.run(["clop", str(example_path("two_cycle.json"))])
        self.assertEqual(result.exit_code, EXIT_FAILED)
        self.assertEqual(result.payload["error_type"], "FrameError")

    def test_enum_frames(self):
        """Test the two-point transits are counted."""
        result = self.workbench.run(["enum-frames", "2"])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload["count"], 12)
        self.assertEqual(result.lines[-1], "count: 12")

    def test_enum_frames_too_large(self):
        """Test an oversized point count is a usage error."""
        result = self.workbench.run(["enum-frames", "13"])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertEqual(result.payload["error_type"], "UsageError")

    def test_roundtrip_frame(self):
        """Test the frame round trip passes."""
        result = self.workbench.run(["roundtrip", self.frame])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.lines[0], "pass")
        self.assertEqual(set(result.payload["checks"]), {"gamma", "file"})


class TestAlgebraCommands(unittest.TestCase):
    """Tests for the algebra verbs."""

    def setUp(self):
        """Set up test fixtures."""
        self.workbench = Workbench()
        self.chain4 = str(example_path("chain4.json"))

    def test_check_algebra(self):
        """Test both axiomatisations pass for the four-chain."""
        result = self.workbench.run(["check-algebra", self.chain4])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertIn("adjunction: pass", result.lines)
        self.assertIn("equational: pass", result.lines)

    def test_spec(self):
        """Test the dual of the four-chain is the three-point frame."""
        result = self.workbench.run(["spec", self.chain4])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload["frame"]["r"], [[0, 1], [0, 2], [1, 1], [1, 2]])
        self.assertEqual(result.payload["point_filters"], [[3], [2, 3], [1, 2, 3]])

    def test_congruences(self):
        """Test the four-chain has three congruences."""
        result = self.workbench.run(["congruences", self.chain4])
        self.assertEqual(result.payload["count"], 3)
        self.assertEqual(result.lines[0], "congruences: 3")

    def test_classify(self):
        """Test the four-chain is subdirectly irreducible but not simple."""
        result = self.workbench.run(["classify", self.chain4])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.lines[:2], ["simple: no", "SI: yes"])
        self.assertTrue(result.payload["consistent"])

    def test_roundtrip_algebra(self):
        """Test the algebra round trip passes."""
        result = self.workbench.run(["roundtrip", self.chain4])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(set(result.payload["checks"]), {"pi", "file"})

    def test_missing_file(self):
        """Test an unreadable file is bad input."""
        result = self.workbench.run(["check-algebra", "no/such/file.json"])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertEqual(result.payload["error_type"], "FileFormatError")


class TestLogicCommands(unittest.TestCase):
    """Tests for the formula verbs."""

    def setUp(self):
        """Set up test fixtures."""
        self.workbench = Workbench()
        self.relational = str(example_path("model_chain2.json"))
        self.algebraic = str(example_path("model_chain3.json"))

    def test_eval_refuted(self):
        """Test excluded middle is refuted at the bottom of the two-chain."""
        result = self.workbench.run(["eval", "--model", self.relational, "--formula", "p | (p -> bot)"])
        self.assertEqual(result.exit_code, EXIT_FAILED)
        self.assertEqual(result.payload["points"], [1])
        self.assertEqual(result.payload["refuted_at"], 0)

    def test_eval_algebraic(self):
        """Test □p evaluates to top in the three-chain model."""
        result = self.workbench.run(["eval", "--model", self.algebraic, "--formula", "box p"])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload["value"], 2)
        self.assertTrue(result.payload["valid"])

    def test_eval_syntax_error(self):
        """Test a malformed formula is bad input."""
        result = self.workbench.run(["eval", "--model", self.relational, "--formula", "p &"])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertIn("offset 4", result.payload["error"])

    def test_countermodel(self):
        """Test found and not-found searches exit differently."""
        found = self.workbench.run(["countermodel", "--formula", "box p -> p", "--max-size", "2"])
        self.assertEqual(found.exit_code, EXIT_OK)
        self.assertTrue(found.payload["found"])
        missing = self.workbench.run(["countermodel", "--formula", "dia p -> p", "--max-size", "2"])
        self.assertEqual(missing.exit_code, EXIT_FAILED)
        self.assertEqual(missing.lines[0], "no countermodel up to 2 points")

    def test_filtrate(self):
        """Test filtrating both kinds of model file."""
        result = self.workbench.run(["filtrate", "--model", self.relational, "--formula", "p"])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.lines[0], "classes: 2")
        dualised = self.workbench.run(["filtrate", "--model", self.algebraic, "--formula", "p"])
        self.assertEqual(dualised.exit_code, EXIT_OK)

    def test_sweep(self):
        """Test a small duality sweep passes."""
        result = self.workbench.run(["sweep", "duality", "--max-points", "1"])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload["checked"], 3)


class TestEntryPoint(unittest.TestCase):
    """Tests for argument handling and rendering."""

    def test_unknown_verb(self):
        """Test an unknown verb is a usage error."""
        result = Workbench().run(["frobnicate"])
        self.assertEqual(result.exit_code, EXIT_INPUT)
        self.assertFalse(result.payload["success"])

    def test_output_format(self):
        """Test the format flag is found in either spelling."""
        workbench = Workbench()
        self.assertEqual(workbench.output_format(["spec", "a.json", "--format", "json"]), "json")
        self.assertEqual(workbench.output_format(["spec", "a.json", "--format=json"]), "json")
        self.assertEqual(workbench.output_format(["spec", "--format", "yaml"]), "text")

    def test_render(self):
        """Test text and JSON rendering."""
        result = CommandResult(EXIT_OK, {"valid": True}, ["valid", "points: 1"])
        self.assertEqual(render(result, "text", color=False), "valid\npoints: 1\n")
        self.assertEqual(json.loads(render(result, "json")), {"valid": True})
        self.assertIn("valid", render(result, "text", color=True))

    def test_main_json(self):
        """Test main prints JSON and returns the exit code."""
        argv = ["enum-frames", "1", "--format", "json"]
        with patch("sys.stdout", new_callable=io.StringIO) as out:
            code = main(argv)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out.getvalue())["count"], 2)


if __name__ == "__main__":
    unittest.main()
