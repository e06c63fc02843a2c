"""Orbits of GL(V) on the enhanced nilpotent cone V x N: combinatorics,
exact Kostka-type polynomials and brute-force checks over finite fields."""

from .combinatorics import Bipartition, Partition, bipartition, enumerate_bipartitions, hasse
from .shoji import solve_kostka_table

__all__ = ["Bipartition", "Partition", "bipartition", "enumerate_bipartitions", "hasse",
           "solve_kostka_table"]
__version__ = "0.1.0"
