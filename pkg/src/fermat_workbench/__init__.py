"""Exact-arithmetic workbench for Diophantine statements around Fermat's last theorem."""

__version__ = "0.1.0"
