"""Exact verification of the numerical steps behind Bloch's conjecture for
Inoue surfaces with p_g = 0 and K^2 = 7."""

__version__ = "0.1.0"
