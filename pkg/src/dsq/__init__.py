"""Exact spectral graph tools for Laplacian spectral characterisation of centipedes."""

__version__ = "0.1.0"
