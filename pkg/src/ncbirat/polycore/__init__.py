"""Exact coefficients, commutative polynomials, Groebner bases and the
nonemptiness test for locally closed sets over algebraically closed fields."""
from .domains import (GF, QQ, ZZ, BadReduction, Domain, DomainError, ModInt,
                      domain_from_name, field_for_characteristic, is_prime)
from .groebner import (LocallyClosedSystem, ResourceLimit, decide_locally_closed_nonempty,
                       groebner_basis, in_ideal, in_radical, is_unit_ideal, normal_form)
from .parse import ParseError, format_poly, parse_poly
from .poly import GREVLEX, LEX, Monomial, MonomialOrder, Poly, poly_arith

__all__ = [
    "GF", "QQ", "ZZ", "BadReduction", "Domain", "DomainError", "ModInt", "domain_from_name",
    "field_for_characteristic", "is_prime", "LocallyClosedSystem", "ResourceLimit",
    "decide_locally_closed_nonempty", "groebner_basis", "in_ideal", "in_radical",
    "is_unit_ideal", "normal_form", "ParseError", "format_poly", "parse_poly", "GREVLEX",
    "LEX", "Monomial", "MonomialOrder", "Poly", "poly_arith",
]
