"""Freely reduced words over a signed, integer-indexed alphabet.

A letter is a pair (index, sign).  Internally a letter is one int64 key,
``2*index + (0 if sign > 0 else 1)``, so ``key ^ 1`` is the inverse letter
and plain integer order on keys is the letter order

    ... < x-1 < x-1^-1 < x0 < x0^-1 < x1 < x1^-1 < x2 < ...

which restricted to indices 1..n is the rank-n order x1 < x1^-1 < ... < xn^-1.
Words are stored fully reduced at all times; reduction happens at
construction, never lazily.  Word order is shortlex: length first, then
lexicographic on keys.  All values are immutable and all operations pure.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

import numpy as np

from . import backend as _K

INT = np.int64


class Letter(NamedTuple):
    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def letter_key(index: int, sign: int = 1) -> int:
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign}")
    return 2 * index + (0 if sign > 0 else 1)


def key_letter(key: int) -> Letter:
    return Letter(int(key) >> 1, 1 if key & 1 == 0 else -1)


def _as_key_array(keys) -> np.ndarray:
    a = np.asarray(keys, dtype=INT)
    if a.ndim != 1:
        raise ValueError("letter keys must form a 1-d sequence")
    return a


class Word:
    """An immutable freely reduced word."""

    __slots__ = ("keys", "_hash")

    def __init__(self, letters: Iterable[Letter | tuple[int, int]] = ()):
        raw = np.fromiter(
            (letter_key(i, s) for i, s in letters), dtype=INT, count=-1
        )
        self.keys = _freeze(_K.free_reduce(raw))
        self._hash = None

    @classmethod
    def from_keys(cls, keys, reduced: bool = False) -> "Word":
        """Build from raw keys; set ``reduced`` only when provably reduced."""
        a = _as_key_array(keys)
        w = object.__new__(cls)
        w.keys = _freeze(a if reduced else _K.free_reduce(a))
        w._hash = None
        return w

    @classmethod
    def _wrap(cls, keys: np.ndarray) -> "Word":
        # internal fast path: keys must be a reduced int64 array that no one
        # else will mutate
        w = object.__new__(cls)
        w.keys = keys
        w._hash = None
        return w

    # -- basic queries ------------------------------------------------

    def __len__(self) -> int:
        return self.keys.shape[0]

    def __bool__(self) -> bool:
        return self.keys.shape[0] > 0

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(key_letter(k) for k in self.keys)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._wrap(self.keys[i])
        return key_letter(self.keys[i])

    def is_cyclically_reduced(self) -> bool:
        lo, hi = _K.cyclic_bounds(self.keys)
        return lo == 0

    def index_range(self) -> tuple[int, int]:
        """(min, max) generator index occurring in the word; (0, 0) if empty."""
        if not len(self):
            return (0, 0)
        idx = self.keys >> 1
        return (int(idx.min()), int(idx.max()))

    # -- group operations ----------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word._wrap(_K.concat_reduce(self.keys, other.keys))

    def inverse(self) -> "Word":
        return Word._wrap(self.keys[::-1] ^ 1)

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = EMPTY
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugated_by(self, u: "Word") -> "Word":
        """Reduction of u^-1 * self * u."""
        return u.inverse() * self * u

    # -- order, equality, hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.keys.shape == other.keys.shape and bool(
            np.array_equal(self.keys, other.keys)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.keys.tobytes())
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        if len(self) != len(other):
            return len(self) < len(other)
        return bool(_K.lex_less(self.keys, other.keys))

    def __le__(self, other: "Word") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Word") -> bool:
        return other < self

    def __ge__(self, other: "Word") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


EMPTY = Word.from_keys((), reduced=True)


def word(*letters) -> Word:
    """Convenience constructor: word((1, 1), (2, -1)) -> x1 x2^-1."""
    return Word(letters)


# -- reduction and order ---------------------------------------------------


def free_reduce(letters: Iterable) -> Word:
    """Reduce a raw letter sequence (pairs or Letters) to a Word."""
    return Word(letters)


def cyclically_reduce(v: Word) -> tuple[Word, Word]:
    """Split v = s * core * s^-1 with core cyclically reduced.

    Returns (core, s); core has minimal length in the free-group conjugacy
    class of v.
    """
    lo, hi = _K.cyclic_bounds(v.keys)
    core = Word.from_keys(v.keys[lo:hi], reduced=True)
    s = Word.from_keys(v.keys[:lo], reduced=True)
    return core, s


def shortlex_compare(u: Word, v: Word) -> int:
    """Total order: length first, then lexicographic.  Returns -1, 0 or 1."""
    if u == v:
        return 0
    return -1 if u < v else 1


# -- text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"^([xyz])(-?\d+)(\^-1)?$")


class ParseError(ValueError):
    pass


def parse_word(text: str, rank: int | None = None, _pos_offset: int = 0) -> Word:
    """Parse whitespace-separated letter tokens.

    Tokens are ``x<i>`` or ``x<i>^-1``; ``y``/``z`` are 0-based aliases for
    the internal 1-based ``x`` alphabet (y0 == x1).  ``1`` is the empty word.
    With ``rank`` given, indices must lie in 1..rank; without it (the
    countably generated mode) any integer index is accepted.
    """
    keys = []
    for pos, tok in enumerate(text.split(), start=_pos_offset):
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"unrecognized token {tok!r} at position {pos}")
        name, idx_s, inv = m.groups()
        index = int(idx_s)
        if name in ("y", "z"):
            if index < 0:
                raise ParseError(
                    f"alias token {tok!r} at position {pos} needs a 0-based index"
                )
            index += 1
        if rank is not None:
            if not 1 <= index <= rank:
                raise ParseError(
                    f"generator index out of range 1..{rank} in token {tok!r} "
                    f"at position {pos}"
                )
        keys.append(letter_key(index, -1 if inv else 1))
    return Word.from_keys(keys)


def format_word(w: Word) -> str:
    """Canonical text form; inverse of ``parse_word`` on canonical strings."""
    if not len(w):
        return "1"
    parts = []
    for k in w.keys:
        i = int(k) >> 1
        parts.append(f"x{i}" if k & 1 == 0 else f"x{i}^-1")
    return " ".join(parts)
