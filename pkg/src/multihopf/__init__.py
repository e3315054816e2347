"""Exact computations in six combinatorial Hopf algebras built on multi-permutations,
set-valued tableaux and their relatives."""
from .poly import TruncPoly
from .series import BasisElement
from .shapes import Composition, Partition, SkewShape
from .words import MPermBig, MPermSmall, WordElement

__all__ = ["TruncPoly", "BasisElement", "Composition", "Partition", "SkewShape",
           "MPermBig", "MPermSmall", "WordElement"]
__version__ = "0.1.0"
