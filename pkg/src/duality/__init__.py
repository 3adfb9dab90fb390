"""Duality between algebras and transits."""
