"""Exact verification of invariant frames, brackets and Hopf fibrations on S^3 and S^7."""

__version__ = "0.1.0"
