"""Tetra-tag encoding and depth-bounded decoding."""

from ._core import (
    FormatError,
    NoPathError,
    ParseError,
    Session,
    StructureError,
    TetratagError,
    ValidityError,
    decode,
    depths,
    encode,
    leaves,
    normalize,
    one_hot,
    validate,
    vocab,
)

__all__ = [
    "FormatError",
    "NoPathError",
    "ParseError",
    "Session",
    "StructureError",
    "TetratagError",
    "ValidityError",
    "decode",
    "depths",
    "encode",
    "leaves",
    "normalize",
    "one_hot",
    "validate",
    "vocab",
]
