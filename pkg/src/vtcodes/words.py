"""Shared word handling: validation, text formats, block conversions, and
duplicate-free single-edit neighbourhoods.

Serialization conventions used throughout the package and the CLI: a bit
sequence is a contiguous string of '0'/'1' characters with the lowest index
leftmost; a q-ary word is a run of space-separated decimal symbols, which
stays unambiguous for alphabets larger than ten.
"""

from __future__ import annotations

import operator
from typing import Iterable, Iterator

from .errors import ParameterError

Word = tuple[int, ...]


def _as_int(value) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise ParameterError(f"expected an integer, got {value!r}") from None


def check_symbols(word: Iterable[int]) -> Word:
    """Validate a sequence of non-negative integer symbols (alphabet unknown)."""
    if isinstance(word, str):
        raise ParameterError("expected a sequence of ints; use parse_symbols() for text")
    out = tuple(_as_int(s) for s in word)
    for s in out:
        if s < 0:
            raise ParameterError(f"symbols must be non-negative, got {s}")
    return out


def check_word(word: Iterable[int], q: int) -> Word:
    """Validate a word over the alphabet {0, .., q-1} and return it as a tuple."""
    out = check_symbols(word)
    for s in out:
        if s >= q:
            raise ParameterError(f"symbol {s} out of range for alphabet size {q}")
    return out


def check_bits(bits: Iterable[int]) -> Word:
    if isinstance(bits, str):
        raise ParameterError("expected a sequence of ints; use parse_bitstring() for text")
    return check_word(bits, 2)


def parse_bitstring(text: str) -> Word:
    bad = set(text) - {"0", "1"}
    if bad:
        raise ParameterError(f"bit string may only contain 0 and 1, got {sorted(bad)}")
    return tuple(int(c) for c in text)


def format_bitstring(bits: Iterable[int]) -> str:
    return "".join(str(b) for b in check_bits(bits))


def parse_symbols(text: str) -> Word:
    try:
        out = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ParameterError(f"symbols must be decimal integers, got {text!r}") from None
    return check_symbols(out)


def format_symbols(word: Iterable[int]) -> str:
    return " ".join(str(s) for s in check_symbols(word))


def bits_to_int(bits: Iterable[int]) -> int:
    """Big-endian: the first bit is the most significant."""
    value = 0
    for b in check_bits(bits):
        value = (value << 1) | b
    return value


def int_to_bits(value: int, width: int) -> Word:
    value = _as_int(value)
    width = _as_int(width)
    if width < 0:
        raise ParameterError(f"width must be non-negative, got {width}")
    if value < 0 or value >> width:
        raise ParameterError(f"{value} does not fit in {width} bits")
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def digits_to_int(digits: Iterable[int], base: int) -> int:
    """Big-endian base conversion; the first digit is the most significant."""
    base = _as_int(base)
    if base < 2:
        raise ParameterError(f"base must be at least 2, got {base}")
    value = 0
    for d in check_word(digits, base):
        value = value * base + d
    return value


def int_to_digits(value: int, base: int, width: int) -> Word:
    value = _as_int(value)
    base = _as_int(base)
    width = _as_int(width)
    if base < 2:
        raise ParameterError(f"base must be at least 2, got {base}")
    if width < 0:
        raise ParameterError(f"width must be non-negative, got {width}")
    if value < 0 or value >= base**width:
        raise ParameterError(f"{value} does not fit in {width} base-{base} digits")
    out = []
    for _ in range(width):
        value, d = divmod(value, base)
        out.append(d)
    return tuple(reversed(out))


def distinct_deletions(word: Word) -> Iterator[Word]:
    """Every word reachable by deleting one symbol, each yielded exactly once.

    Deleting any symbol of a run produces the same word, so only the first
    position of each run is used.
    """
    for i, s in enumerate(word):
        if i and s == word[i - 1]:
            continue
        yield word[:i] + word[i + 1 :]


def distinct_insertions(word: Word, q: int) -> Iterator[Word]:
    """Every word reachable by inserting one symbol from {0, .., q-1}, each
    yielded exactly once.

    Inserting s directly before an existing s duplicates the insertion one
    step later, so those positions are skipped.
    """
    for i in range(len(word) + 1):
        for s in range(q):
            if i < len(word) and word[i] == s:
                continue
            yield word[:i] + (s,) + word[i:]
