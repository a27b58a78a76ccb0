"""Exact-arithmetic verification toolkit: Galois-equivariant character
lattice sweeps, CM-type combinatorics, small Lie representation
classification, quaternion representation checks, Hermitian positivity
feasibility, and formal period bookkeeping."""

__version__ = "0.1.0"
