"""Exact computations with walled Brauer algebras, their affine and level-two
quotients, and the gl(m|n) tensor-module realization."""

__version__ = "0.1.0"
