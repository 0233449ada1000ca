"""Toolkit for the twenty two-class uniform maps on the torus: generation
from (i, j, k) strip data, structural verification, connectivity, and
Hamiltonian cycle construction with an independent search oracle."""

__version__ = "0.1.0"
