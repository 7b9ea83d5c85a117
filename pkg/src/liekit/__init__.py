"""Exact-arithmetic toolkit for compact simple Lie algebras.

Everything is computed over the rationals: structure-constant tables for
the classical chains and the five exceptional algebras, exhaustive Jacobi
verification, Killing forms, root systems with exponents and Weyl orders,
Kostant multiplets for equal-rank subgroups, and odd-sphere topology
reports.  No floating point is used anywhere in the core.
"""

__version__ = "0.1.0"

CONVENTION = "bourbaki"
