"""Loop symmetric functions over cyclically colored variables, the birational
R-matrix action, tropicalization and crystal statistics, box-ball systems,
and whirl factorization of matrix polynomials."""

__version__ = "0.1.0"
