"""Tests for filtration through subformula-closed sets."""

import unittest

import numpy as np

from config.tests.fixtures import X, Y, Z, ten_point_frame, three_point_frame
from src.core.errors import FiltrationError
from src.frames.transit import is_transit
from src.logic.filtration import (
    filtrate,
    filtration_conditions_check,
    filtration_lemma_check,
    is_subformula_closed,
    subformula_closure,
    subformula_witness,
)
from src.logic.formula import Atom, Box, Dia, Imp, Or, neg, thc_axioms
from src.logic.models import RelationalModel
from src.logic.random_gen import random_formula, random_model
from src.utils.helpers import mask_of

P, Q = Atom("p"), Atom("q")


class TestSubformulaClosure(unittest.TestCase):
    """Tests for subformula closures."""

    def test_order(self):
        """Test the closure is ordered by size and then by text."""
        f = Imp(Box(P), P)
        self.assertEqual(subformula_closure(f), [P, Box(P), f])
        self.assertEqual(subformula_closure(Or(Q, P)), [P, Q, Or(Q, P)])

    def test_closed_check(self):
        """Test a set missing a child is reported."""
        self.assertTrue(is_subformula_closed(subformula_closure(Dia(P))))
        self.assertFalse(is_subformula_closed([Box(P)]))
        self.assertEqual(subformula_witness([Box(P)]), (Box(P), P))

    def test_shared_subformulas_counted_once(self):
        """Test repeated subformulas appear once."""
        self.assertEqual(len(subformula_closure(Or(P, neg(P)))), 4)


class TestFiltrate(unittest.TestCase):
    """Tests for filtrate."""

    def setUp(self):
        """Set up test fixtures."""
        self.model = RelationalModel(three_point_frame(), {"p": mask_of([Y, Z])})

    def test_collapse_by_atom(self):
        """Test filtrating by p merges y and z."""
        result = filtrate(self.model, [P])
        self.assertEqual(result.size, 2)
        self.assertEqual(result.class_of, (0, 1, 1))
        self.assertEqual(result.classes, (mask_of([X]), mask_of([Y, Z])))
        frame = result.model.frame
        self.assertEqual(frame.r_fwd.pairs(), [(0, 1), (1, 1)])
        self.assertEqual(frame.labels, ("[x]", "[y,z]"))
        self.assertEqual(result.model.valuation, {"p": mask_of([1])})

    def test_to_dict(self):
        """Test the report shape."""
        payload = filtrate(self.model, [P]).to_dict()
        self.assertEqual(payload["sigma"], ["p"])
        self.assertEqual(payload["classes"], [[0], [1, 2]])
        self.assertEqual(payload["r"], [[0, 1], [1, 1]])
        self.assertEqual(payload["val"], {"p": [1]})

    def test_not_closed(self):
        """Test a set that is not subformula-closed is refused."""
        with self.assertRaises(FiltrationError) as ctx:
            filtrate(self.model, [Box(P)])
        self.assertEqual(ctx.exception.witness, ("box p", "p"))

    def test_empty_set_gives_single_class(self):
        """Test filtrating through nothing leaves one class."""
        result = filtrate(self.model, [])
        self.assertEqual(result.size, 1)
        self.assertEqual(result.model.valuation, {})

    def test_lemma_on_ten_point_frame(self):
        """Test the filtration lemma for the axioms on the ten-point frame."""
        frame = ten_point_frame()
        model = RelationalModel(frame, {"p": frame.up(mask_of([2])), "q": frame.up(mask_of([8]))})
        for f in thc_axioms() + [Or(P, neg(P)), Imp(Dia(P), Box(Q))]:
            self.assertTrue(filtration_lemma_check(model, f))
            self.assertTrue(filtration_conditions_check(model, subformula_closure(f)).ok)

    def test_random_models(self):
        """Test filtrations of random models are transits no larger than the bound."""
        rng = np.random.default_rng(13)
        for _ in range(60):
            model = random_model(rng, 6)
            f = random_formula(rng, depth=3)
            sigma = subformula_closure(f)
            result = filtrate(model, sigma)
            self.assertTrue(is_transit(result.model.frame))
            self.assertLessEqual(result.size, min(model.frame.size, 2 ** len(sigma)))
            self.assertTrue(filtration_lemma_check(model, f))
            self.assertTrue(filtration_conditions_check(model, sigma, result).ok)


if __name__ == "__main__":
    unittest.main()
