"""Exact factorization counts and separation probabilities for products of cycles."""

from .core import Composition, Partition, Permutation

__version__ = "0.1.0"

__all__ = ["Composition", "Partition", "Permutation", "__version__"]
