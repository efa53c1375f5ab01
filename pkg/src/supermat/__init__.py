"""Exact computation in supernatural matrix algebras, Leavitt algebras and deep matrices."""

from .chain import AdicWord, DivisorChain, parse_chain, parse_word
from .core import CoreElement, ModuleVector
from .errors import SupermatError
from .field import GF, QQ, parse_field
from .snum import SupernaturalNumber, parse_snum

__version__ = "0.1.0"

__all__ = [
    "AdicWord",
    "CoreElement",
    "DivisorChain",
    "GF",
    "ModuleVector",
    "QQ",
    "SupermatError",
    "SupernaturalNumber",
    "parse_chain",
    "parse_field",
    "parse_snum",
    "parse_word",
]
