"""Affine cactus groups: word problem, normal forms, torsion and presentations."""
from .cactus import (
    INFINITE, MatrixOracle, SemidirectElement, defining_relations, diagram_letters, embed_classic, epsilon,
    equal_classic, equal_words, generators, in_range, is_decreasing, is_identity, is_irreducibly_decreasing, is_pure,
    is_reduced, lift_reduce, order, phi, pi, rep_equal, rep_matrices, rotate, split, torsion_element,
)
from .circular import AffineSet, CircularInterval, CircularSet
from .perm import AffinePermutation, Permutation, interval_reversal
from .racg import RacgAlphabet, RacgWord
from .words import CactusWord, ClassicCactusWord, Letter, ParseError

__all__ = [
    "INFINITE", "MatrixOracle", "SemidirectElement", "defining_relations", "diagram_letters", "embed_classic",
    "epsilon", "equal_classic", "equal_words", "generators", "in_range", "is_decreasing", "is_identity",
    "is_irreducibly_decreasing", "is_pure", "is_reduced", "lift_reduce", "order", "phi", "pi", "rep_equal",
    "rep_matrices", "rotate", "split", "torsion_element", "AffineSet", "CircularInterval", "CircularSet",
    "AffinePermutation", "Permutation", "interval_reversal", "RacgAlphabet", "RacgWord", "CactusWord",
    "ClassicCactusWord", "Letter", "ParseError",
]
