"""Single-deletion/insertion correcting codes over alphabets of size q >= 3.

A word c_0 .. c_{n-1} over {0, .., q-1} is summarized by two residues: the
weighted checksum (mod n) of its auxiliary sequence, the binary word whose
bit i records whether c_i >= c_{i-1}, and the plain symbol sum (mod q).
Fixing both residues yields a code that corrects any single symbol deletion
or insertion.

The systematic encoder reserves the power-of-two positions 2^j and their odd
neighbours 2^j - 1, 2^j + 1. Free message symbols ride in the remaining
positions; the neighbour pairs carry message data through a constrained value
table; the reserved positions then absorb the checksum deficit and the first
three symbols absorb the sum deficit. Lengths with n - 1 a power of two would
need position n for the layout and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .binary import syndrome
from .errors import (
    AmbiguousCorrectionError,
    ExtractionError,
    MessageLengthError,
    NoCandidateError,
    NotACodewordError,
    ParameterError,
    UnsupportedLengthError,
    UnsupportedParametersError,
)
from .words import (
    Word,
    bits_to_int,
    check_bits,
    check_symbols,
    check_word,
    digits_to_int,
    distinct_deletions,
    distinct_insertions,
    int_to_bits,
    int_to_digits,
)


def aux_sequence(word: Iterable[int]) -> Word:
    """Binary comparison sequence of a word of length >= 2.

    Bit i (for i = 1 .. n-1, reported 0-indexed) is 1 exactly when the symbol
    in position i is >= its left neighbour.
    """
    w = check_symbols(word)
    if len(w) < 2:
        raise ParameterError(f"word must have length at least 2, got {len(w)}")
    return tuple(1 if w[i] >= w[i - 1] else 0 for i in range(1, len(w)))


def mod_sum(word: Iterable[int], q: int) -> int:
    """Symbol sum mod q."""
    if q < 2:
        raise ParameterError(f"alphabet size must be at least 2, got {q}")
    return sum(check_word(word, q)) % q


def code_signature(word: Iterable[int], q: int) -> tuple[int, int]:
    """(auxiliary checksum mod n, symbol sum mod q) of a word of length n."""
    w = check_word(word, q)
    return syndrome(aux_sequence(w)), sum(w) % q


def _ilog2(x: int) -> int:
    """floor(log2(x)) for positive integers, exact."""
    return x.bit_length() - 1


def _check_code_shape(n: int, q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 3:
        raise ParameterError(f"alphabet size must be an int >= 3, got {q!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 6:
        raise ParameterError(f"code length must be an int >= 6, got {n!r}")
    if (n - 1) & (n - 2) == 0:
        raise UnsupportedLengthError(
            f"length {n} is unsupported: the reserved-position layout needs "
            f"position {n}, one past the end"
        )


def message_length(n: int, q: int) -> int:
    """Message bits carried by the systematic encoder at length n, alphabet q.

    Counts the free-position block, one constrained-pair block per reserved
    power of two above 4, and (for q >= 4) the lone constrained symbol next
    to position 4. May be 0 for the smallest shapes, e.g. (n=6, q=3).
    """
    _check_code_shape(n, q)
    t = (n - 1).bit_length()
    free = n - 3 * t + 3
    if q == 3:
        return _ilog2(3**free) + 2 * (t - 3)
    return _ilog2(q**free) + (t - 3) * _ilog2((q - 1) ** 2) + _ilog2(q - 1)


class PairTable:
    """Canonical message-value tables for one alphabet size.

    pairs lists, in lexicographic order, every (left, right) value pair with
    left != 0 and right != left - 1; those are exactly the assignments that
    keep the auxiliary bits around a reserved position independent of the
    deficit-driven choice there. singles lists the values allowed for the
    symbol in position 5 when position 3 is pinned to q - 1 (everything but
    q - 2), ascending.
    """

    def __init__(self, q: int):
        if not isinstance(q, int) or isinstance(q, bool) or q < 3:
            raise ParameterError(f"alphabet size must be an int >= 3, got {q!r}")
        self.q = q
        self.pairs: tuple[tuple[int, int], ...] = tuple(
            (left, right)
            for left in range(1, q)
            for right in range(q)
            if right != left - 1
        )
        self.singles: Word = tuple(v for v in range(q) if v != q - 2)
        self._pair_index = {pair: i for i, pair in enumerate(self.pairs)}
        self._single_index = {v: i for i, v in enumerate(self.singles)}

    @property
    def pair_bits(self) -> int:
        """Message bits per constrained pair: floor(log2((q-1)^2))."""
        return _ilog2((self.q - 1) ** 2)

    @property
    def single_bits(self) -> int:
        """Message bits in the position-5 symbol: floor(log2(q-1))."""
        return _ilog2(self.q - 1)

    def pair(self, index: int) -> tuple[int, int]:
        if not 0 <= index < len(self.pairs):
            raise ParameterError(f"pair index {index} out of range 0..{len(self.pairs) - 1}")
        return self.pairs[index]

    def pair_index(self, pair: tuple[int, int]) -> int:
        try:
            return self._pair_index[tuple(pair)]
        except KeyError:
            raise ParameterError(f"{pair!r} is not a valid constrained pair for q={self.q}") from None

    def single(self, index: int) -> int:
        if not 0 <= index < len(self.singles):
            raise ParameterError(f"value index {index} out of range 0..{len(self.singles) - 1}")
        return self.singles[index]

    def single_index(self, value: int) -> int:
        try:
            return self._single_index[value]
        except KeyError:
            raise ParameterError(f"{value!r} is not a valid position-5 value for q={self.q}") from None


@lru_cache(maxsize=None)
def pair_table(q: int) -> PairTable:
    return PairTable(q)


def canonical_pair(q: int, index: int) -> tuple[int, int]:
    """The index-th constrained pair, in lexicographic order."""
    return pair_table(q).pair(index)


def canonical_pair_index(q: int, pair: tuple[int, int]) -> int:
    """Position of a constrained pair in the canonical ordering."""
    return pair_table(q).pair_index(pair)


@dataclass(frozen=True)
class QaryVtParams:
    """Code shape: length n >= 6, alphabet q >= 3, and the two target
    residues, 0 <= a <= n-1 for the auxiliary checksum and 0 <= b <= q-1 for
    the symbol sum."""

    n: int
    q: int
    a: int
    b: int

    def __post_init__(self) -> None:
        _check_code_shape(self.n, self.q)
        for name, value in (("a", self.a), ("b", self.b)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParameterError(f"{name} must be an int, got {value!r}")
        if not 0 <= self.a < self.n:
            raise ParameterError(f"a must lie in 0..{self.n - 1}, got {self.a}")
        if not 0 <= self.b < self.q:
            raise ParameterError(f"b must lie in 0..{self.q - 1}, got {self.b}")

    @property
    def t(self) -> int:
        """Number of reserved powers of two: ceil(log2(n))."""
        return (self.n - 1).bit_length()

    @cached_property
    def k(self) -> int:
        """Message bits per codeword (0 for the smallest shapes)."""
        return message_length(self.n, self.q)

    @cached_property
    def dyadic_positions(self) -> Word:
        return tuple(1 << j for j in range(self.t))

    @cached_property
    def pair_positions(self) -> tuple[tuple[int, int], ...]:
        """Odd neighbours (2^j - 1, 2^j + 1) of each reserved 2^j, j >= 2."""
        return tuple(((1 << j) - 1, (1 << j) + 1) for j in range(2, self.t))

    @cached_property
    def free_positions(self) -> Word:
        """Positions that carry plain base-q message symbols."""
        reserved = set(self.dyadic_positions)
        for left, right in self.pair_positions:
            reserved.add(left)
            reserved.add(right)
        return tuple(p for p in range(1, self.n) if p not in reserved)


def _matches_code(w: Sequence[int], n: int, q: int, a: int, b: int) -> bool:
    """Membership test for an already validated word of length n."""
    syn = 0
    total = w[0]
    prev = w[0]
    for i in range(1, n):
        cur = w[i]
        if cur >= prev:
            syn += i
        total += cur
        prev = cur
    return syn % n == a and total % q == b


def is_member(word: Iterable[int], params: QaryVtParams) -> bool:
    """True when the word hits both target residues of the code."""
    w = check_word(word, params.q)
    if len(w) != params.n:
        raise ParameterError(f"expected a word of length {params.n}, got {len(w)}")
    return _matches_code(w, params.n, params.q, params.a, params.b)


def step6_triple(w: int, q: int) -> tuple[int, int, int]:
    """Three distinct ascending values summing to w mod q (alphabet q >= 4).

    The defaults 0, 1, w-1 collide when w is 1 or 2, so those two cases swap
    in the top symbol q - 1 instead.
    """
    if not isinstance(q, int) or isinstance(q, bool) or q < 4:
        raise ParameterError(f"alphabet size must be an int >= 4, got {q!r}")
    if not isinstance(w, int) or isinstance(w, bool) or not 0 <= w < q:
        raise ParameterError(f"target residue must lie in 0..{q - 1}, got {w!r}")
    if w == 1:
        return (0, 2, q - 1)
    if w == 2:
        return (1, 2, q - 1)
    return (0, 1, (w - 1) % q)


def arrange_prefix(triple: tuple[int, int, int], alpha1: int, alpha2: int) -> tuple[int, int, int]:
    """Order three ascending values so the prefix realizes the two given
    auxiliary bits: bit 1 compares positions 1 and 0, bit 2 positions 2 and 1."""
    x, y, z = triple
    if not x < y < z:
        raise ParameterError(f"expected three distinct ascending values, got {triple!r}")
    if alpha1 not in (0, 1) or alpha2 not in (0, 1):
        raise ParameterError("auxiliary bits must be 0 or 1")
    if alpha1 and alpha2:
        return (x, y, z)
    if alpha1:
        return (x, z, y)
    if alpha2:
        return (y, x, z)
    return (z, y, x)


def _place_message(bits: Word, params: QaryVtParams) -> list:
    """Spread message bits over the free, pair, and position-5 slots.

    Returns the word as a list with positions 0..2 and the reserved powers of
    two still unset (None).
    """
    q = params.q
    table = pair_table(q)
    c: list = [None] * params.n
    free = params.free_positions
    used = 0
    if free:
        width = _ilog2(q ** len(free))
        value = bits_to_int(bits[:width])
        used = width
        for pos, sym in zip(free, int_to_digits(value, q, len(free))):
            c[pos] = sym
    for left, right in params.pair_positions[1:]:
        idx = bits_to_int(bits[used : used + table.pair_bits])
        used += table.pair_bits
        c[left], c[right] = table.pair(idx)
    if q == 3:
        c[3], c[5] = 2, 2
    else:
        c[3] = q - 1
        idx = bits_to_int(bits[used : used + table.single_bits])
        used += table.single_bits
        c[5] = table.single(idx)
    assert used == len(bits)
    return c


def _prefill_aux(c: Sequence, params: QaryVtParams) -> list:
    """Auxiliary bits of a partially built word, reserved positions zeroed.

    Position 3 is pinned to the largest value in play, so its bit is 1
    outright; a position just after a reserved power of two compares across
    it, which stays valid however the reserved symbol is later chosen.
    """
    n = params.n
    dyadic = set(params.dyadic_positions)
    aux = [0] * n  # index i holds the bit comparing positions i and i-1
    for i in range(1, n):
        if i in dyadic:
            continue
        if i == 3:
            aux[i] = 1
        elif i - 1 in dyadic and i > 3:
            aux[i] = 1 if c[i] >= c[i - 2] else 0
        else:
            aux[i] = 1 if c[i] >= c[i - 1] else 0
    return aux


def _finish_prefix_q3(c: list, aux: list, b: int) -> None:
    """Choose the first three symbols for alphabet 3.

    Over {0,1,2} no three distinct values exist, so the prefix works with
    repeats. When both leading auxiliary bits are 0 no prefix can descend
    below the pinned c_3 = 2; the bits at 1, 2, 3 are rewritten from 0,0,1 to
    1,1,0 (same weight: 1 + 2 = 3) and c_3, c_4 are lowered to match.
    """
    if aux[1] == 0 and aux[2] == 0:
        aux[1], aux[2], aux[3] = 1, 1, 0
        c[3] = 1
        c[4] = c[3] if aux[4] else c[3] - 1
    w = (b - sum(c[3:])) % 3
    if aux[1] and aux[2]:
        c[1], c[2] = 2, 2
    elif aux[1]:
        c[1], c[2] = 2, 1
    else:
        c[1], c[2] = (0, 0, 1)[w], 2
    c[0] = (w - c[1] - c[2]) % 3


def _complete_codeword(c: list, params: QaryVtParams) -> Word:
    """Fill the reserved and prefix positions of a word whose message
    positions are already set, landing it on the target residues."""
    n, q, a, b = params.n, params.q, params.a, params.b
    aux = _prefill_aux(c, params)
    deficit = (a - syndrome(aux[1:])) % n
    for j, pos in enumerate(params.dyadic_positions):
        aux[pos] = (deficit >> j) & 1
    for pos in params.dyadic_positions[2:]:
        c[pos] = c[pos - 1] if aux[pos] else c[pos - 1] - 1
    if q == 3:
        _finish_prefix_q3(c, aux, b)
    else:
        w = (b - sum(c[3:])) % q
        c[0], c[1], c[2] = arrange_prefix(step6_triple(w, q), aux[1], aux[2])
    word = tuple(c)
    assert _matches_code(word, n, q, a, b)
    return word


def encode(message: Iterable[int], params: QaryVtParams) -> Word:
    """Systematically encode k message bits into a codeword."""
    bits = check_bits(message)
    if params.k == 0:
        raise UnsupportedParametersError(
            f"(n={params.n}, q={params.q}) carries no message bits"
        )
    if len(bits) != params.k:
        raise MessageLengthError(
            f"expected {params.k} message bits for (n={params.n}, q={params.q}), "
            f"got {len(bits)}"
        )
    return _complete_codeword(_place_message(bits, params), params)


def extract(word: Iterable[int], params: QaryVtParams) -> Word:
    """Read the message bits back out of a codeword produced by encode()."""
    w = check_word(word, params.q)
    n, q = params.n, params.q
    if len(w) != n:
        raise ParameterError(f"expected a word of length {n}, got {len(w)}")
    if params.k == 0:
        raise UnsupportedParametersError(f"(n={n}, q={q}) carries no message bits")
    if not _matches_code(w, n, q, params.a, params.b):
        raise NotACodewordError(f"word is not in the code (a={params.a}, b={params.b})")
    table = pair_table(q)
    bits: list = []
    free = params.free_positions
    if free:
        width = _ilog2(q ** len(free))
        value = digits_to_int([w[p] for p in free], q)
        if value >> width:
            raise ExtractionError("free-position symbols exceed the message range")
        bits += int_to_bits(value, width)
    for left, right in params.pair_positions[1:]:
        try:
            idx = table.pair_index((w[left], w[right]))
        except ParameterError as exc:
            raise ExtractionError(
                f"positions {left}, {right} do not hold a constrained pair"
            ) from exc
        if idx >> table.pair_bits:
            raise ExtractionError(f"pair at positions {left}, {right} exceeds the message range")
        bits += int_to_bits(idx, table.pair_bits)
    if q == 3:
        if w[5] != 2 or w[3] not in (1, 2):
            raise ExtractionError("positions 3 and 5 do not match the encoder layout")
    else:
        if w[3] != q - 1:
            raise ExtractionError(f"position 3 must hold {q - 1}, got {w[3]}")
        try:
            idx = table.single_index(w[5])
        except ParameterError as exc:
            raise ExtractionError(f"position 5 holds the excluded value {w[5]}") from exc
        if idx >> table.single_bits:
            raise ExtractionError("position 5 exceeds the message range")
        bits += int_to_bits(idx, table.single_bits)
    assert len(bits) == params.k
    return tuple(bits)


def correct(received: Iterable[int], params: QaryVtParams) -> Word:
    """Recover the codeword from a word that suffered at most one edit.

    Candidates one edit away are enumerated without duplicates and filtered
    by the two residues; the surviving candidate is unique.
    """
    r = check_word(received, params.q)
    n, q, a, b = params.n, params.q, params.a, params.b
    if len(r) == n:
        if _matches_code(r, n, q, a, b):
            return r
        raise NotACodewordError(f"word of length {n} is not in the code (a={a}, b={b})")
    if len(r) == n - 1:
        candidates = distinct_insertions(r, q)
    elif len(r) == n + 1:
        candidates = distinct_deletions(r)
    else:
        raise ParameterError(f"received length {len(r)} is not within one edit of n={n}")
    found = None
    for cand in candidates:
        if _matches_code(cand, n, q, a, b):
            if found is not None:
                raise AmbiguousCorrectionError(
                    f"multiple codewords within one edit of the received word "
                    f"(n={n}, q={q}, a={a}, b={b})"
                )
            found = cand
    if found is None:
        raise NoCandidateError(
            f"no codeword within one edit of the received word (n={n}, q={q}, a={a}, b={b})"
        )
    return found
