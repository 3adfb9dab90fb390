"""Tests for descent, Z-reachability and archival upsets."""

import unittest

from config.tests.fixtures import (
    W4,
    W4P,
    X,
    X4,
    Y,
    Z,
    Z4,
    antichain,
    chain2,
    example_path,
    point,
    ten_point_frame,
    three_point_frame,
)
from src.frames.enumeration import enumerate_transits
from src.frames.reachability import (
    FINITE,
    GENERAL,
    archival_upsets,
    archival_witness,
    b_relation,
    is_archival,
    is_z_connected,
    is_z_rooted,
    topo_reachable,
    topo_relation,
    z_closure,
    z_relation,
    z_roots,
)
from src.serialization.formats import load_frame
from src.utils.helpers import mask_of, read_text


class TestThreePointFrame(unittest.TestCase):
    """Tests for reachability on x < y < z with a loop at y."""

    def setUp(self):
        """Set up test fixtures."""
        self.frame = three_point_frame()

    def test_descent(self):
        """Test B is the diagonal plus z B y."""
        self.assertEqual(b_relation(self.frame).pairs(), [(X, X), (Y, Y), (Z, Y), (Z, Z)])

    def test_z_relation(self):
        """Test Z-reachability from each point."""
        z = z_relation(self.frame)
        self.assertEqual(z.rows[X], 0b111)
        self.assertEqual(z.rows[Y], mask_of([Y, Z]))
        self.assertEqual(z.rows[Z], mask_of([Y, Z]))
        self.assertEqual(z_roots(self.frame), mask_of([X]))
        self.assertTrue(is_z_rooted(self.frame))
        self.assertFalse(is_z_connected(self.frame))

    def test_archival_upsets(self):
        """Test {z} is the only upset that is not archival."""
        self.assertEqual(archival_upsets(self.frame), [0, mask_of([Y, Z]), 0b111])
        self.assertEqual(archival_witness(self.frame, mask_of([Z])), (X, Z))

    def test_topo_matches_z(self):
        """Test topo-reachability and Z-reachability agree."""
        topo = topo_relation(self.frame)
        self.assertEqual(topo, z_relation(self.frame))
        self.assertTrue(topo_reachable(self.frame, X, Z))
        self.assertFalse(topo_reachable(self.frame, Z, X))

    def test_z_closure(self):
        """Test Z-closure of a set."""
        self.assertEqual(z_closure(self.frame, mask_of([Z])), mask_of([Y, Z]))


class TestTenPointFrame(unittest.TestCase):
    """Tests for the ten-point frame where w and w' stay out of reach."""

    def setUp(self):
        """Set up test fixtures."""
        self.frame = ten_point_frame()

    def test_matches_example_file(self):
        """Test the fixture and the shipped example file agree."""
        loaded = load_frame(read_text(example_path("frame_ten_point.json")))
        self.assertEqual(loaded, self.frame)
        self.assertEqual(loaded.labels, self.frame.labels)

    def test_reach_from_z(self):
        """Test Z[z] is everything except w and w'."""
        self.assertEqual(z_relation(self.frame).rows[Z4], mask_of([1, 2, 3, 5, 6, 7, 8, 9]))

    def test_descent_stops_at_loop(self):
        """Test z descends to x but not past it to w."""
        b = b_relation(self.frame)
        self.assertTrue(b.holds(Z4, X4))
        self.assertFalse(b.holds(Z4, W4))

    def test_rooted_at_w(self):
        """Test w is a Z-root and w' is not reachable from z."""
        self.assertTrue(z_roots(self.frame) >> W4 & 1)
        self.assertFalse(z_closure(self.frame, mask_of([Z4])) >> W4P & 1)


class TestArchivalModes(unittest.TestCase):
    """Tests for the general and finite archival conditions."""

    def test_modes_agree_on_small_frames(self):
        """Test the two conditions coincide on every subset of every small transit."""
        for n in range(4):
            for frame in enumerate_transits(n):
                for s in range(1 << n):
                    self.assertEqual(is_archival(frame, s, GENERAL), is_archival(frame, s, FINITE))

    def test_unknown_mode(self):
        """Test an unknown mode is rejected."""
        with self.assertRaises(ValueError):
            archival_witness(point(False), 0, "sometimes")

    def test_irreflexive_chain(self):
        """Test only the trivial upsets of an irreflexive chain are archival."""
        self.assertEqual(archival_upsets(chain2()), [0, 0b11])

    def test_reflexive_antichain(self):
        """Test every upset of a reflexive antichain is archival and Z is the identity."""
        frame = antichain(3)
        self.assertEqual(len(archival_upsets(frame)), 8)
        self.assertEqual(z_roots(frame), 0)

    def test_single_points(self):
        """Test both one-point frames are Z-connected."""
        self.assertTrue(is_z_connected(point(True)))
        self.assertTrue(is_z_connected(point(False)))


if __name__ == "__main__":
    unittest.main()
