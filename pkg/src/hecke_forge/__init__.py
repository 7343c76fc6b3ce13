"""hecke_forge: exact-arithmetic tools for type-A Iwahori-Hecke algebras,
extended affine Weyl combinatorics, finite GL(n,q) trace formulas, and
Euler-Poincare pseudo-coefficient assembly, with brute-force oracles for
every identity at desk scale."""

__version__ = "0.1.0"
