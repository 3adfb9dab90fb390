"""Tests for the corpus sweeps."""

import unittest

import pytest

from config.settings import DEFAULT_JOBS, FULL_SWEEPS, SWEEP_MAX_POINTS
from src.core.errors import UsageError
from src.corpus.sweeps import DEFAULT_MAX_POINTS, SWEEPS, SweepReport, corpus_keys, run_items, run_sweep


def _no_failures(item):
    return []


def _odd(item):
    return [f"item {item}"] if item % 2 else []


class TestSweepMachinery(unittest.TestCase):
    """Tests for reports and item dispatch."""

    def test_corpus_size(self):
        """Test the corpus holds every transit on at most three points."""
        self.assertEqual(len(corpus_keys(3)), 1 + 2 + 12 + 152)

    def test_report(self):
        """Test report status and truncation."""
        report = SweepReport("demo", 5, [f"f{i}" for i in range(30)])
        self.assertFalse(report.ok)
        payload = report.to_dict()
        self.assertEqual(payload["failed"], 30)
        self.assertEqual(len(payload["failures"]), 20)
        self.assertTrue(SweepReport("empty").ok)

    def test_run_items_keeps_order(self):
        """Test failures come back in item order for any worker count."""
        items = list(range(9))
        expected = ["item 1", "item 3", "item 5", "item 7"]
        self.assertEqual(run_items(_odd, items, 1), expected)
        self.assertEqual(run_items(_odd, items, 3), expected)
        self.assertEqual(run_items(_no_failures, items, 2), [])

    def test_default_corpus_sizes(self):
        """Test fmp and reachability default to a larger corpus when full sweeps are on."""
        for name in ("fmp", "reachability"):
            self.assertEqual(DEFAULT_MAX_POINTS[name], 5 if FULL_SWEEPS else 3)
        self.assertNotIn("duality", DEFAULT_MAX_POINTS)
        self.assertLessEqual(SWEEP_MAX_POINTS, DEFAULT_MAX_POINTS["fmp"])

    def test_unknown_sweep(self):
        """Test an unknown sweep name is a usage error."""
        with self.assertRaises(UsageError):
            run_sweep("nonsense")


class TestReducedSweeps(unittest.TestCase):
    """Every sweep on a small corpus."""

    def test_exhaustive_sweeps(self):
        """Test the frame-by-frame sweeps pass on up to three points."""
        for name in ("duality", "correspondence", "reachability", "characterisation", "subdirect"):
            report = run_sweep(name, max_points=3)
            self.assertTrue(report.ok, report.failures[:3])
            self.assertEqual(report.checked, 167)

    def test_sampling_sweeps(self):
        """Test the sampling sweeps pass on a few seeded samples."""
        for name in ("soundness", "truth_lemma", "filtration"):
            report = run_sweep(name, max_points=2, samples=25, seed=17)
            self.assertTrue(report.ok, report.failures[:3])
            self.assertEqual(report.parameters["seed"], 17)

    def test_fmp(self):
        """Test the bounded search finds the known refutations."""
        report = run_sweep("fmp", max_points=2)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.checked, 2 + 8 + 1)

    def test_sampling_is_reproducible(self):
        """Test a seed fixes the sampled report."""
        first = run_sweep("truth_lemma", max_points=2, samples=10, seed=5).to_dict()
        second = run_sweep("truth_lemma", max_points=2, samples=10, seed=5).to_dict()
        self.assertEqual(first, second)


@pytest.mark.slow
@unittest.skipUnless(FULL_SWEEPS, "set THW_FULL_SWEEPS=1 to run the five-point sweeps")
class TestFivePointSweeps(unittest.TestCase):
    """The search and reachability checks on every transit with at most five points."""

    def test_axioms_have_no_countermodel(self):
        """Test no axiom has a countermodel on five points or fewer."""
        report = run_sweep("fmp", max_points=5, jobs=max(DEFAULT_JOBS, 4))
        self.assertTrue(report.ok, report.failures)

    def test_reachability(self):
        """Test the reachability checks on every transit with at most five points."""
        report = run_sweep("reachability", max_points=5, jobs=max(DEFAULT_JOBS, 4))
        self.assertTrue(report.ok, report.failures[:3])
        self.assertEqual(report.checked, 1 + 2 + 12 + 152 + 3504)


@pytest.mark.slow
@unittest.skipUnless(FULL_SWEEPS, "set THW_FULL_SWEEPS=1 to run the full corpus")
class TestFullSweeps(unittest.TestCase):
    """Every sweep with the configured full-size defaults."""

    def test_all(self):
        """Test every registered sweep passes."""
        for name in SWEEPS:
            report = run_sweep(name, jobs=2)
            self.assertTrue(report.ok, f"{name}: {report.failures[:3]}")


if __name__ == "__main__":
    unittest.main()
