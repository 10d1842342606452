"""Filtered noncommutative algebras: Weyl algebras, enveloping algebras of
Chevalley Z-forms, Weyl-group invariants and polynomial rings."""
from .algebra import ZAlgebra, commutative_zalgebra, enveloping_zalgebra, weyl_zalgebra
from .family import (KINDS, AlgebraElement, FamilyInstance, FamilyMismatch, commutative_family,
                     enveloping_family, family_from_descriptor, family_from_string,
                     invariant_family, mono_key, mul, weyl_family)
from .filtration import (AveragingUnavailable, FiltrationPiece, GroupAction, act, casimir,
                         filtration_piece, graded_dimension, growth_exponent, group_action,
                         is_invariant, monomials_of_degree, monomials_up_to, piece_dimension,
                         simple_reflections)

__all__ = [
    "ZAlgebra", "weyl_zalgebra", "enveloping_zalgebra", "commutative_zalgebra", "KINDS",
    "AlgebraElement", "FamilyInstance", "FamilyMismatch", "weyl_family", "commutative_family",
    "enveloping_family", "invariant_family", "family_from_descriptor", "family_from_string",
    "mono_key", "mul", "AveragingUnavailable", "FiltrationPiece", "GroupAction", "act",
    "casimir", "filtration_piece", "graded_dimension", "growth_exponent", "group_action",
    "is_invariant", "monomials_of_degree", "monomials_up_to", "piece_dimension",
    "simple_reflections",
]
