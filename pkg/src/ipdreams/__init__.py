"""Interval positroid pipe dreams: enumeration, Schubert expansions,
shifting and puzzles on Grassmannians."""
from .core import BoundedAffinePermutation, PartialPermutation, extend_to_juggling
from .dreams import Mode, PipeDream, Tile, enumerate_dreams
from .classes import SchubertExpansion, expand

__all__ = [
    "BoundedAffinePermutation", "PartialPermutation", "extend_to_juggling",
    "Mode", "PipeDream", "Tile", "enumerate_dreams",
    "SchubertExpansion", "expand",
]
__version__ = "0.1.0"
