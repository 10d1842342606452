"""Existential sentences at explicit degree bounds: emission, certificate
assignments, serialization and toy-scale decision."""
from .assign import (AssignmentCheck, BoundsMismatch, NotVerified, check_assignment,
                     profile_from_certificate, witness_data, witness_to_assignment)
from .decide import INCONCLUSIVE, SAT, UNSAT, decide_sentence, presimplify
from .emit import (SCHEMA_VERSION, CapExceeded, ExistentialSentence, Variable, catalogue_size,
                   emit_sentence)
from .io import SentenceFormatError, parse_sentence, sentence_from_dict, sentence_to_dict, serialize
from .profile import DEFAULT_CAP, BoundProfile, ProfileError, load_profile, profile_from_dict

__all__ = [
    "AssignmentCheck", "BoundsMismatch", "NotVerified", "check_assignment",
    "profile_from_certificate", "witness_data", "witness_to_assignment", "INCONCLUSIVE", "SAT",
    "UNSAT", "decide_sentence", "presimplify", "SCHEMA_VERSION", "CapExceeded",
    "ExistentialSentence", "Variable", "catalogue_size", "emit_sentence", "SentenceFormatError",
    "parse_sentence", "sentence_from_dict", "sentence_to_dict", "serialize", "DEFAULT_CAP",
    "BoundProfile", "ProfileError", "load_profile", "profile_from_dict",
]
