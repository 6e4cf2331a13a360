"""Exact computations in representation rings of quantum affine gl, their
q-characters, Hall algebras of linear and cyclic quivers, and Fock spaces."""

__version__ = "0.1.0"
