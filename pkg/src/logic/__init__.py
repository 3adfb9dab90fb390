"""Formulas, semantics, filtration and search."""
