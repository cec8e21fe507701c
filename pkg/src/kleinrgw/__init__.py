"""Exact evaluation of the Klein TQFT computing local real Gromov-Witten invariants of curves."""

__version__ = "0.1.0"
