"""Finite temporal Heyting algebras."""
