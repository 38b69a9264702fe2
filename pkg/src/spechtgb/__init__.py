"""Specht-type ideals, their Groebner bases, and machine checks of their properties."""

__version__ = "0.1.0"

from .partitions import Filter, Partition, add_box, conjugate, covers, dominates, enumerate_partitions
from .tableaux import Tableau, enumerate_standard, enumerate_tableaux
from .specht import IdealSpec, generators, specht_polynomial

__all__ = [
    "__version__", "Filter", "Partition", "add_box", "conjugate", "covers", "dominates",
    "enumerate_partitions", "Tableau", "enumerate_standard", "enumerate_tableaux",
    "IdealSpec", "generators", "specht_polynomial",
]
