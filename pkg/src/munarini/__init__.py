"""Munarini graphs M_{n,k}, generalized Pell graphs and their cube enumeration."""
from .errors import ConsistencyError, InputError, UnsupportedParameterError
from .strings import (
    BinaryLabel,
    PellString,
    count_ank_words,
    decode_psi,
    encode_psi,
    enumerate_maximal_strings,
    enumerate_pell_strings,
    is_pell_string,
    weight,
)

__all__ = [
    "BinaryLabel",
    "ConsistencyError",
    "InputError",
    "PellString",
    "UnsupportedParameterError",
    "count_ank_words",
    "decode_psi",
    "encode_psi",
    "enumerate_maximal_strings",
    "enumerate_pell_strings",
    "is_pell_string",
    "weight",
]
