"""Symmetry groups of generalized Petersen graphs and their realizability verdicts."""

__version__ = "0.1.0"
