"""Ternary words ``s_n ... s_1`` over the peg alphabet ``{0, 1, 2}``.

A word is stored as an integer holding two bits per digit (``s_1`` in the
lowest bits) plus an explicit length, so copies and comparisons are O(1).
The textual form lists ``s_n`` first, i.e. the largest disc on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyWord, InvalidCharacter, TooLong

MAX_ORDER = 20
DIGITS = (0, 1, 2)


def check_digit(value: int) -> int:
    if value not in DIGITS:
        raise InvalidCharacter(f"digit must be 0, 1 or 2, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class TernaryWord:
    """Immutable ternary word.

    Field order makes the derived ordering compare by length first, then
    lexicographically, which is the canonical vertex order used for output.
    """

    length: int
    packed: int

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> TernaryWord:
        """Build a word from digits given most significant (``s_n``) first."""
        packed = 0
        length = 0
        for d in digits:
            packed = (packed << 2) | check_digit(d)
            length += 1
        if length > MAX_ORDER:
            raise TooLong(f"word length {length} exceeds MAX_ORDER={MAX_ORDER}")
        return cls(length, packed)

    @classmethod
    def from_index(cls, index: int, length: int) -> TernaryWord:
        """Inverse of :attr:`index`: the word whose base-3 value is ``index``."""
        if length > MAX_ORDER:
            raise TooLong(f"word length {length} exceeds MAX_ORDER={MAX_ORDER}")
        if not 0 <= index < 3**length:
            raise ValueError(f"index {index} out of range for length {length}")
        packed = 0
        for pos in range(length):
            index, d = divmod(index, 3)
            packed |= d << (2 * pos)
        return cls(length, packed)

    @classmethod
    def constant(cls, digit: int, length: int) -> TernaryWord:
        return cls.from_digits([digit] * length)

    def digit(self, position: int) -> int:
        """Return ``s_position`` (1-based, ``s_1`` is the smallest disc)."""
        if not 1 <= position <= self.length:
            raise IndexError(position)
        return (self.packed >> (2 * (position - 1))) & 3

    @property
    def digits(self) -> tuple[int, ...]:
        """Digits ``s_n, ..., s_1``."""
        return tuple(self.digit(p) for p in range(self.length, 0, -1))

    @property
    def index(self) -> int:
        """Base-3 value; lexicographic order on equal lengths matches it."""
        value = 0
        for d in self.digits:
            value = 3 * value + d
        return value

    def prefix(self, length: int) -> TernaryWord:
        """The leading ``length`` digits ``s_n ... s_{n-length+1}``."""
        if not 0 <= length <= self.length:
            raise IndexError(length)
        return TernaryWord(length, self.packed >> (2 * (self.length - length)))

    def suffix(self, length: int) -> TernaryWord:
        """The trailing ``length`` digits ``s_length ... s_1``."""
        if not 0 <= length <= self.length:
            raise IndexError(length)
        return TernaryWord(length, self.packed & ((1 << (2 * length)) - 1))

    def __add__(self, other: TernaryWord) -> TernaryWord:
        length = self.length + other.length
        if length > MAX_ORDER:
            raise TooLong(f"word length {length} exceeds MAX_ORDER={MAX_ORDER}")
        return TernaryWord(length, (self.packed << (2 * other.length)) | other.packed)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"TernaryWord({format_word(self)!r})"


EMPTY = TernaryWord(0, 0)


def parse_word(text: str) -> TernaryWord:
    for pos, ch in enumerate(text):
        if ch not in "012":
            raise InvalidCharacter(f"invalid character {ch!r} at position {pos} in {text!r}")
    if len(text) > MAX_ORDER:
        raise TooLong(f"word {text!r} longer than MAX_ORDER={MAX_ORDER}")
    return TernaryWord.from_digits(int(ch) for ch in text)


def format_word(w: TernaryWord) -> str:
    return "".join(str(d) for d in w.digits)


def build_pattern(prefix: TernaryWord, i: int, j: int, run: int) -> TernaryWord:
    """The word ``prefix · i · j^run``."""
    if run < 0:
        raise ValueError("run must be non-negative")
    check_digit(i)
    check_digit(j)
    if prefix.length + 1 + run > MAX_ORDER:
        raise TooLong(f"pattern length {prefix.length + 1 + run} exceeds MAX_ORDER={MAX_ORDER}")
    return prefix + TernaryWord.from_digits([i] + [j] * run)


def trailing_run(w: TernaryWord) -> tuple[int, int]:
    """Return ``(s_1, k)`` with ``k`` maximal such that ``s_1 = ... = s_k``."""
    if w.length == 0:
        raise EmptyWord("trailing_run of the empty word")
    last = w.digit(1)
    run = 1
    while run < w.length and w.digit(run + 1) == last:
        run += 1
    return last, run
