"""Noncommutative birational equivalence at desk scale: Weyl and enveloping
algebras, Ore fractions, witness certificates and their first-order sentences."""

__version__ = "0.1.0"
