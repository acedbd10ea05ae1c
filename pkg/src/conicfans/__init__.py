"""Exact-arithmetic root data, colored fans, and conic orbit atlases."""

from .rootcore import (InvalidTypeError, OrbitLimitError, ParabolicSubset,
                       RootDatum, StructureError, UnsupportedAlgebraError,
                       WeylWord, build_root_datum)

__all__ = [
    "InvalidTypeError", "OrbitLimitError", "ParabolicSubset", "RootDatum",
    "StructureError", "UnsupportedAlgebraError", "WeylWord",
    "build_root_datum",
]

__version__ = "0.1.0"
