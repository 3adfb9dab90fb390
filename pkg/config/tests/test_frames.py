"""Tests for temporal transits, p-morphisms and enumeration."""

import unittest

from config.tests.fixtures import X, Y, Z, antichain, chain2, point, three_point_frame, two_cycle
from src.core.errors import MorphismError
from src.core.order import BinRel
from src.frames.enumeration import enumerate_transits, enumerate_transits_upto
from src.frames.reachability import z_roots
from src.frames.transit import (
    PMorphism,
    TemporalTransit,
    frame_isomorphism,
    is_temporal_p_morphism,
    is_transit,
    refl_points,
    validate_transit,
)
from src.utils.helpers import mask_of


class TestTemporalTransit(unittest.TestCase):
    """Tests for TemporalTransit."""

    def setUp(self):
        """Set up test fixtures."""
        self.frame = three_point_frame()

    def test_derived_relations(self):
        """Test ≤ and R◁ are derived from R▷."""
        self.assertEqual(self.frame.leq.pairs(), [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)])
        self.assertEqual(self.frame.r_back.pairs(), [(1, 0), (1, 1), (2, 0), (2, 1)])
        self.assertEqual(refl_points(self.frame), mask_of([Y]))

    def test_valid(self):
        """Test the three-point frame is a transit."""
        report = validate_transit(self.frame)
        self.assertTrue(report.ok, report.violations)

    def test_upsets(self):
        """Test upsets of the chain x < y < z."""
        self.assertEqual(self.frame.upsets(), [0, mask_of([Z]), mask_of([Y, Z]), 0b111])

    def test_labels(self):
        """Test labels are kept but not compared."""
        self.assertEqual(self.frame.label(X), "x")
        unlabeled = TemporalTransit(3, self.frame.r_fwd)
        self.assertEqual(unlabeled, self.frame)
        self.assertEqual(unlabeled.label(2), "2")

    def test_two_cycle_rejected(self):
        """Test a two-cycle fails antisymmetry with its witness."""
        report = validate_transit(two_cycle())
        violation = report.first("antisymmetry")
        self.assertIsNotNone(violation)
        self.assertEqual(violation.witness, (0, 1))
        self.assertFalse(is_transit(two_cycle()))

    def test_intransitive_rejected(self):
        """Test a missing composite is reported as transitivity."""
        frame = TemporalTransit.from_pairs(3, [(0, 1), (1, 2)])
        report = validate_transit(frame)
        self.assertEqual(report.first("transitivity").witness, (0, 1, 2))

    def test_label_count_checked(self):
        """Test a wrong number of labels is a violation."""
        frame = TemporalTransit.from_pairs(2, [(0, 1)], ["a"])
        self.assertIn("labels", validate_transit(frame).clauses())

    def test_empty_and_single_frames(self):
        """Test the degenerate frames are transits."""
        self.assertTrue(is_transit(TemporalTransit(0, BinRel.empty(0))))
        self.assertTrue(is_transit(point(True)))
        self.assertTrue(is_transit(point(False)))


class TestPMorphism(unittest.TestCase):
    """Tests for temporal p-morphisms."""

    def test_collapse_to_reflexive_point(self):
        """Test a reflexive antichain maps onto a reflexive point."""
        m = PMorphism(antichain(2), point(True), (0, 0))
        self.assertTrue(is_temporal_p_morphism(m).ok)

    def test_identity(self):
        """Test the identity map on the three-point frame."""
        frame = three_point_frame()
        self.assertTrue(is_temporal_p_morphism(PMorphism(frame, frame, (0, 1, 2))).ok)

    def test_loop_must_be_preserved(self):
        """Test mapping a reflexive point to an irreflexive one fails r-forth."""
        m = PMorphism(point(True), point(False), (0,))
        self.assertIn("r-forth", is_temporal_p_morphism(m).clauses())

    def test_back_condition(self):
        """Test a map whose image misses a successor fails r-back."""
        m = PMorphism(point(False), chain2(), (0,))
        report = is_temporal_p_morphism(m)
        self.assertIn("r-back", report.clauses())
        self.assertIn("leq-back", report.clauses())

    def test_out_of_range(self):
        """Test a map leaving the target is rejected."""
        with self.assertRaises(MorphismError):
            PMorphism(point(False), point(False), (1,))
        with self.assertRaises(MorphismError):
            PMorphism(chain2(), point(False), (0,))

    def test_composition(self):
        """Test composites of p-morphisms are p-morphisms."""
        first = PMorphism(antichain(3), antichain(2), (0, 1, 1))
        second = PMorphism(antichain(2), point(True), (0, 0))
        composite = first.then(second)
        self.assertEqual(composite.mapping, (0, 0, 0))
        self.assertTrue(is_temporal_p_morphism(composite).ok)


class TestFrameIsomorphism(unittest.TestCase):
    """Tests for frame_isomorphism."""

    def test_relabelled_chain(self):
        """Test the two orientations of a two-chain are isomorphic."""
        upward = chain2()
        downward = TemporalTransit.from_pairs(2, [(1, 0)])
        self.assertEqual(frame_isomorphism(upward, downward), (1, 0))

    def test_loops_distinguish(self):
        """Test chains differing in loops are not isomorphic."""
        self.assertIsNone(frame_isomorphism(chain2(), chain2(loops=(0,))))
        self.assertIsNone(frame_isomorphism(chain2(loops=(0,)), chain2(loops=(1,))))


class TestEnumeration(unittest.TestCase):
    """Tests for transit enumeration."""

    def test_counts(self):
        """Test the number of labeled transits per size."""
        counts = [sum(1 for _ in enumerate_transits(n)) for n in range(4)]
        self.assertEqual(counts, [1, 2, 12, 152])

    def test_all_valid_and_distinct(self):
        """Test every enumerated frame is a transit and appears once."""
        frames = list(enumerate_transits(3))
        self.assertTrue(all(is_transit(f) for f in frames))
        self.assertEqual(len({f.r_fwd for f in frames}), len(frames))

    def test_rooted_only(self):
        """Test the rooted stream keeps exactly the frames with a Z-root."""
        rooted = list(enumerate_transits(2, rooted_only=True))
        everything = [f for f in enumerate_transits(2) if z_roots(f)]
        self.assertEqual(rooted, everything)
        self.assertLess(len(rooted), 12)

    def test_deterministic(self):
        """Test two walks give the same order."""
        self.assertEqual(list(enumerate_transits(3)), list(enumerate_transits(3)))

    def test_upto(self):
        """Test sizes are visited smallest first."""
        sizes = [f.size for f in enumerate_transits_upto(2)]
        self.assertEqual(sizes, [0, 1, 1] + [2] * 12)


if __name__ == "__main__":
    unittest.main()
