"""Tests for frame, algebra and model files."""

import unittest

from config.tests.fixtures import chain3, example_path, three_point_frame
from src.core.errors import FileFormatError
from src.logic.models import AlgebraicModel, RelationalModel
from src.serialization.formats import (
    algebra_to_dict,
    dump_algebra,
    dump_frame,
    dump_model,
    load_algebra,
    load_frame,
    load_model,
)
from src.utils.helpers import read_text


class TestFrameFiles(unittest.TestCase):
    """Tests for frame files."""

    def test_load_example(self):
        """Test the three-point example loads with labels."""
        frame = load_frame(read_text(example_path("frame_three_point.json")))
        self.assertEqual(frame, three_point_frame())
        self.assertEqual(frame.labels, ("x", "y", "z"))

    def test_emit_is_canonical(self):
        """Test emission reproduces the shipped files byte for byte."""
        for name in ("frame_three_point.json", "frame_ten_point.json", "two_cycle.json", "chain2_irreflexive.json"):
            text = read_text(example_path(name))
            self.assertEqual(dump_frame(load_frame(text)), text)

    def test_unsorted_pairs_accepted(self):
        """Test pairs in any order load and emit sorted."""
        frame = load_frame('{"points": 2, "r": [[1, 1], [0, 1]]}')
        self.assertEqual(dump_frame(frame), '{"points":2,"r":[[0,1],[1,1]]}\n')

    def test_invalid_frame_still_loads(self):
        """Test loading does not validate the frame."""
        frame = load_frame(read_text(example_path("two_cycle.json")))
        self.assertEqual(frame.r_fwd.pairs(), [(0, 1), (1, 0)])

    def test_errors_carry_location(self):
        """Test malformed files name the offending field."""
        cases = {
            '{"points": 2, "r": [[0, 2]]}': ("r", 0, 1),
            '{"points": 2, "r": [], "labels": ["a"]}': ("labels",),
            '{"points": "2", "r": []}': ("points",),
            '{"points": 2, "r": [], "colour": 1}': ("colour",),
            '{"points": -1}': ("points",),
        }
        for text, location in cases.items():
            with self.assertRaises(FileFormatError) as ctx:
                load_frame(text)
            self.assertEqual(ctx.exception.location, location, text)

    def test_not_json(self):
        """Test text that is not a JSON object is refused."""
        for text in ("{points: 2}", "[1, 2]"):
            with self.assertRaises(FileFormatError):
                load_frame(text)


class TestAlgebraFiles(unittest.TestCase):
    """Tests for algebra files."""

    def test_load_example(self):
        """Test the three-chain example loads."""
        self.assertEqual(load_algebra(read_text(example_path("chain3.json"))), chain3())

    def test_emit_is_canonical(self):
        """Test emission reproduces the shipped files."""
        for name in ("chain3.json", "chain4.json"):
            text = read_text(example_path(name))
            self.assertEqual(dump_algebra(load_algebra(text)), text)

    def test_dict_key_order(self):
        """Test keys come out in file order."""
        self.assertEqual(list(algebra_to_dict(chain3())), ["n", "leq", "box", "dia"])

    def test_errors_carry_location(self):
        """Test malformed algebra files name the offending field."""
        leq = "[[0,0],[0,1],[1,1]]"
        cases = {
            '{"n": 2, "leq": %s, "box": [1], "dia": [0, 0]}' % leq: ("box",),
            '{"n": 2, "leq": %s, "box": [1, 1], "dia": [0, 5]}' % leq: ("dia", 1),
            '{"n": 2, "leq": [[0,0],[1,1]], "box": [0, 1], "dia": [0, 1]}': ("leq",),
            '{"n": 0, "leq": [], "box": [], "dia": []}': ("n",),
            '{"n": 2, "box": [1, 1], "dia": [0, 0]}': ("leq",),
        }
        for text, location in cases.items():
            with self.assertRaises(FileFormatError) as ctx:
                load_algebra(text)
            self.assertEqual(ctx.exception.location, location, text)


class TestModelFiles(unittest.TestCase):
    """Tests for model files."""

    def test_relational(self):
        """Test a relational model file."""
        text = read_text(example_path("model_chain2.json"))
        model = load_model(text)
        self.assertIsInstance(model, RelationalModel)
        self.assertEqual(model.valuation, {"p": 0b10})
        self.assertEqual(dump_model(model), text)

    def test_algebraic(self):
        """Test an algebraic model file."""
        text = read_text(example_path("model_chain3.json"))
        model = load_model(text)
        self.assertIsInstance(model, AlgebraicModel)
        self.assertEqual(model.valuation, {"p": 1})
        self.assertEqual(dump_model(model), text)

    def test_valuation_errors(self):
        """Test bad valuations are reported under val."""
        cases = {
            '{"points": 2, "r": [[0, 1]], "val": {"p": [0]}}': ("val", "p"),
            '{"points": 2, "r": [[0, 1]], "val": {"p": [3]}}': ("val", "p", 0),
            '{"n": 2, "leq": [[0,0],[0,1],[1,1]], "box": [0, 1], "dia": [0, 1], "val": {"q": 2}}': ("val", "q"),
        }
        for text, location in cases.items():
            with self.assertRaises(FileFormatError) as ctx:
                load_model(text)
            self.assertEqual(ctx.exception.location, location, text)

    def test_neither_kind(self):
        """Test a model file must say which kind it is."""
        with self.assertRaises(FileFormatError):
            load_model('{"val": {}}')


if __name__ == "__main__":
    unittest.main()
