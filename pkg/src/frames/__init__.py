"""Temporal transits, reachability and enumeration."""
