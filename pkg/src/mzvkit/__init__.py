"""Truncated multiple zeta values, harmonic-number identities and the
Stirling / zeta-star / Arakawa-Kaneko series built from them."""

__version__ = "0.1.0"
