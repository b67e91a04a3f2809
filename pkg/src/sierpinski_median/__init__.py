"""Sierpiński graphs, Sierpiński triangle graphs and their medians."""

from .errors import (
    DisconnectedGraph,
    EmptyWord,
    InvalidCharacter,
    InvalidVertex,
    OrderTooLarge,
    PrimitiveNotAllowed,
    SierpinskiError,
    TooLong,
    WrongLength,
)
from .words import EMPTY, MAX_ORDER, TernaryWord, build_pattern, format_word, parse_word, trailing_run

__version__ = "0.1.0"
