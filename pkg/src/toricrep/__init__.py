"""Rational homology of real toric spaces built from Coxeter complexes and nestohedra."""

__version__ = "0.1.0"
