"""Binary single-deletion/insertion correcting codes.

A length-n binary word s_1 .. s_n has weighted checksum
sum(i * s_i) mod (n + 1), with positions counted from 1. Fixing that checksum
to a residue a carves {0,1}^n into n + 1 codes, each of which corrects any
single deletion or insertion. The systematic encoder here keeps message bits
in the non-power-of-two positions and solves for the power-of-two ("dyadic")
positions, whose weights 1, 2, 4, .. reach every residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    MessageLengthError,
    AmbiguousCorrectionError,
    NoCandidateError,
    NotACodewordError,
    ParameterError,
)
from .words import Word, check_bits, check_symbols, distinct_deletions, distinct_insertions


def syndrome(word: Iterable[int]) -> int:
    """Weighted checksum sum(i * s_i) mod (n + 1) of a non-empty binary word."""
    bits = check_bits(word)
    if not bits:
        raise ParameterError("word must be non-empty")
    n = len(bits)
    return sum(i * b for i, b in enumerate(bits, start=1)) % (n + 1)


def is_member(word: Iterable[int], a: int) -> bool:
    """True when the word's checksum equals a (taken mod length + 1)."""
    bits = check_bits(word)
    if not bits:
        raise ParameterError("word must be non-empty")
    if not 0 <= a <= len(bits):
        raise ParameterError(f"residue must lie in 0..{len(bits)}, got {a}")
    return syndrome(bits) == a


@dataclass(frozen=True)
class BinaryVtParams:
    """Code length n and target checksum residue a, 0 <= a <= n."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ParameterError(f"n must be an int, got {self.n!r}")
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise ParameterError(f"a must be an int, got {self.a!r}")
        if self.n < 1:
            raise ParameterError(f"n must be at least 1, got {self.n}")
        if not 0 <= self.a <= self.n:
            raise ParameterError(f"a must lie in 0..{self.n}, got {self.a}")

    @property
    def t(self) -> int:
        """Number of dyadic check positions: ceil(log2(n + 1))."""
        return self.n.bit_length()

    @property
    def k(self) -> int:
        """Message bits per codeword."""
        return self.n - self.t

    @cached_property
    def dyadic_positions(self) -> Word:
        return tuple(1 << j for j in range(self.t))

    @cached_property
    def message_positions(self) -> Word:
        """The k lowest non-dyadic positions, ascending (3, 5, 6, 7, 9, ..)."""
        dyadic = set(self.dyadic_positions)
        return tuple(p for p in range(1, self.n + 1) if p not in dyadic)[: self.k]


def encode(message: Iterable[int], params: BinaryVtParams) -> Word:
    """Systematically encode k message bits into a codeword of the code.

    Message bits fill the non-dyadic positions in ascending order; the dyadic
    positions then absorb the checksum deficit, bit j of the deficit landing
    in position 2**j.
    """
    bits = check_bits(message)
    if len(bits) != params.k:
        raise MessageLengthError(
            f"expected {params.k} message bits for n={params.n}, got {len(bits)}"
        )
    word = [0] * params.n
    for pos, bit in zip(params.message_positions, bits):
        word[pos - 1] = bit
    deficit = (params.a - syndrome(word)) % (params.n + 1)
    for j, pos in enumerate(params.dyadic_positions):
        word[pos - 1] = (deficit >> j) & 1
    return tuple(word)


def extract(word: Iterable[int], params: BinaryVtParams) -> Word:
    """Read the message bits back out of a codeword (purely positional)."""
    bits = check_bits(word)
    if len(bits) != params.n:
        raise ParameterError(f"expected a word of length {params.n}, got {len(bits)}")
    return tuple(bits[pos - 1] for pos in params.message_positions)


def _checksum(bits: Sequence[int], modulus: int) -> int:
    total = 0
    for i, b in enumerate(bits, start=1):
        if b:
            total += i
    return total % modulus


def correct(received: Iterable[int], params: BinaryVtParams) -> Word:
    """Recover the codeword from a word that suffered at most one edit.

    A received length of n - 1 means a deletion, n + 1 an insertion, and n
    must already be a codeword. Candidates one edit away are enumerated
    without duplicates and filtered by membership; the match is unique.
    """
    r = check_bits(received)
    n, a = params.n, params.a
    modulus = n + 1
    if len(r) == n:
        if _checksum(r, modulus) == a:
            return r
        raise NotACodewordError(f"word of length {n} is not in the code (a={a})")
    if len(r) == n - 1:
        candidates = distinct_insertions(r, 2)
    elif len(r) == n + 1:
        candidates = distinct_deletions(r)
    else:
        raise ParameterError(
            f"received length {len(r)} is not within one edit of n={n}"
        )
    found = None
    for cand in candidates:
        if _checksum(cand, modulus) == a:
            if found is not None:
                raise AmbiguousCorrectionError(
                    f"multiple codewords within one edit of the received word (n={n}, a={a})"
                )
            found = cand
    if found is None:
        raise NoCandidateError(f"no codeword within one edit of the received word (n={n}, a={a})")
    return found


def validate_syndrome_positions(n: int, positions: Iterable[int]) -> bool:
    """Check whether a set of check positions can absorb any checksum deficit.

    Returns True when every residue mod (n + 1) is a subset sum of the given
    positions. Positions must be distinct and lie in 1..n; the dyadic layout
    used by encode() always qualifies.
    """
    pos = check_symbols(positions)
    if not pos:
        raise ParameterError("at least one position is required")
    if len(set(pos)) != len(pos):
        raise ParameterError("positions must be distinct")
    for p in pos:
        if not 1 <= p <= n:
            raise ParameterError(f"position {p} out of range 1..{n}")
    m = n + 1
    full = (1 << m) - 1
    reachable = 1  # residue 0 via the empty subset
    for p in pos:
        shift = p % m
        reachable |= ((reachable << shift) | (reachable >> (m - shift))) & full
    return reachable == full
