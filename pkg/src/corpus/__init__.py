"""Corpus sweeps."""
