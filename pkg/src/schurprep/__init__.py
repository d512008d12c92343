"""Schur-basis state preparation: labels, dense simulation and resource counts."""

__version__ = "0.1.0"
