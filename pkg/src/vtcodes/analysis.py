"""Exhaustive censuses of the codes at desk scale, analytic size and rate
bounds, and the CSV/JSON report writers.

Counting is done by brute force over the whole word space, vectorized in
chunks, and gated by configurable limits (binary length <= BINARY_LENGTH_LIMIT,
q-ary word count <= QARY_WORD_LIMIT by default). Counts are exact integers;
bounds use exact integer or rational arithmetic where possible, and
real-valued rates are rounded to 6 decimal places in reports.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import LimitExceededError, ParameterError, UnsupportedParametersError
from .qary import _check_code_shape, message_length

BINARY_LENGTH_LIMIT = 20
QARY_WORD_LIMIT = 1 << 24
_CHUNK = 1 << 16

CSV_COLUMNS = ("q", "n", "a", "b", "count", "size_lower", "size_upper")


def _check_int(name: str, value, minimum: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParameterError(f"{name} must be an int >= {minimum}, got {value!r}")
    return value


@lru_cache(maxsize=None)
def _binary_census(n: int) -> tuple[int, ...]:
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        syn = np.zeros(x.shape, dtype=np.int64)
        for i in range(1, n + 1):
            syn += i * ((x >> (i - 1)) & 1)
        counts += np.bincount(syn % (n + 1), minlength=n + 1)
    return tuple(int(c) for c in counts)


def binary_census(n: int, limit: int = BINARY_LENGTH_LIMIT) -> tuple[int, ...]:
    """Exact code sizes for every residue a at length n: entry a holds
    |{words of length n with checksum a}|."""
    _check_int("n", n, 1)
    if n > limit:
        raise LimitExceededError(f"length {n} exceeds the enumeration limit {limit}")
    return _binary_census(n)


def enumerate_binary(n: int, a: int, limit: int = BINARY_LENGTH_LIMIT) -> int:
    """Exact size of the binary code with residue a, by full enumeration."""
    counts = binary_census(n, limit)
    if not 0 <= a <= n:
        raise ParameterError(f"a must lie in 0..{n}, got {a}")
    return counts[a]


def binary_codewords(n: int, a: int, limit: int = BINARY_LENGTH_LIMIT) -> list[tuple[int, ...]]:
    """Every codeword of the binary code with residue a, in integer order
    (bit i of the integer is position i + 1)."""
    _check_int("n", n, 1)
    if n > limit:
        raise LimitExceededError(f"length {n} exceeds the enumeration limit {limit}")
    if not 0 <= a <= n:
        raise ParameterError(f"a must lie in 0..{n}, got {a}")
    out = []
    total = 1 << n
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        syn = np.zeros(x.shape, dtype=np.int64)
        for i in range(1, n + 1):
            syn += i * ((x >> (i - 1)) & 1)
        for v in x[syn % (n + 1) == a]:
            v = int(v)
            out.append(tuple((v >> i) & 1 for i in range(n)))
    return out


@lru_cache(maxsize=None)
def _qary_census(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    counts = np.zeros(n * q, dtype=np.int64)
    weights = np.arange(1, n, dtype=np.int64)[:, None]
    total = q**n
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = np.empty((n, x.shape[0]), dtype=np.int64)
        rem = x
        for j in range(n):
            rem, digits[j] = np.divmod(rem, q)
        syn = ((digits[1:] >= digits[:-1]) * weights).sum(axis=0) % n
        tot = digits.sum(axis=0) % q
        counts += np.bincount(syn * q + tot, minlength=n * q)
    grid = counts.reshape(n, q)
    return tuple(tuple(int(v) for v in row) for row in grid)


def qary_census(n: int, q: int, limit: int = QARY_WORD_LIMIT) -> tuple[tuple[int, ...], ...]:
    """Exact code sizes for every residue pair at length n over alphabet q:
    entry [a][b] holds |{words with auxiliary checksum a and symbol sum b}|.

    Works from the raw code definition, so lengths the encoder rejects
    (n < 6, n = 2**m + 1) are still countable.
    """
    _check_int("n", n, 2)
    _check_int("q", q, 3)
    if q**n > limit:
        raise LimitExceededError(f"{q}**{n} words exceed the enumeration limit {limit}")
    return _qary_census(n, q)


def enumerate_q(n: int, q: int, a: int, b: int, limit: int = QARY_WORD_LIMIT) -> int:
    """Exact size of the q-ary code with residues (a, b), by full enumeration."""
    grid = qary_census(n, q, limit)
    if not 0 <= a < n:
        raise ParameterError(f"a must lie in 0..{n - 1}, got {a}")
    if not 0 <= b < q:
        raise ParameterError(f"b must lie in 0..{q - 1}, got {b}")
    return grid[a][b]


def qary_size_lower_bound(n: int, q: int) -> int:
    """Constructive lower bound on every q-ary code size at length n.

    Counts the codewords reachable by freely choosing whole symbols in the
    encoder's message slots: (q-1)^(2t-5) * q^(n-3t+3) for q >= 4, and
    2^(2(t-3)) * 3^(n-3t+3) for q = 3, with t = ceil(log2 n).
    """
    _check_code_shape(n, q)
    t = (n - 1).bit_length()
    free = n - 3 * t + 3
    if q == 3:
        return (1 << (2 * (t - 3))) * 3**free
    return (q - 1) ** (2 * t - 5) * q**free


def single_deletion_size_bound(n: int, q: int) -> Fraction:
    """Upper bound (q^n - q) / ((q-1)(n-1)) on the size of any q-ary code of
    length n that corrects one deletion, as an exact rational."""
    _check_int("n", n, 2)
    _check_int("q", q, 2)
    return Fraction(q**n - q, (q - 1) * (n - 1))


def binary_size_bounds(n: int) -> tuple[float, float]:
    """Size window 2^n/(n+1) -/+ 2^((n+1)/3) that every binary code of
    length n falls in."""
    _check_int("n", n, 1)
    center = (1 << n) / (n + 1)
    slack = 2.0 ** ((n + 1) / 3)
    return (center - slack, center + slack)


def binary_size_within_bounds(n: int, count: int) -> bool:
    """Exact-arithmetic check that a count lies in the binary size window.

    Cubing |2^n/(n+1) - count| <= 2^((n+1)/3) removes the irrational slack:
    the comparison becomes |..|^3 <= 2^(n+1) over rationals.
    """
    _check_int("n", n, 1)
    gap = Fraction(1 << n, n + 1) - count
    return abs(gap) ** 3 <= (1 << (n + 1))


@dataclass(frozen=True)
class RateReport:
    """Rates and rate bounds, in bits per symbol, for one (n, q) shape."""

    n: int
    q: int
    k: int
    encoder_rate: float
    smallest_code_rate_bound: float
    single_deletion_rate_bound: float
    construction_rate: float
    encoder_rate_floor: float | None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "encoder_rate": round(self.encoder_rate, 6),
            "smallest_code_rate_bound": round(self.smallest_code_rate_bound, 6),
            "single_deletion_rate_bound": round(self.single_deletion_rate_bound, 6),
            "construction_rate": round(self.construction_rate, 6),
            "encoder_rate_floor": None
            if self.encoder_rate_floor is None
            else round(self.encoder_rate_floor, 6),
        }
        return out


def rate_bounds(n: int, q: int) -> RateReport:
    """Rate summary for one code shape.

    encoder_rate is k/n for this encoder. smallest_code_rate_bound is the
    pigeonhole bound log2(q) - log2(n)/n - log2(q)/n on the smallest of the
    n*q codes. single_deletion_rate_bound converts the single-deletion size
    bound to a rate. construction_rate is log2 of the constructive size
    lower bound over n. encoder_rate_floor is the closed-form floor
    log2(3) - 2.76*t/n - 2.25/n, defined for q = 3 only.
    """
    k = message_length(n, q)
    lg = math.log2
    t = (n - 1).bit_length()
    floor = lg(3) - 2.76 * t / n - 2.25 / n if q == 3 else None
    return RateReport(
        n=n,
        q=q,
        k=k,
        encoder_rate=k / n,
        smallest_code_rate_bound=lg(q) - lg(n) / n - lg(q) / n,
        single_deletion_rate_bound=lg(q) - lg(n - 1) / n - lg(q - 1) / n,
        construction_rate=lg(qary_size_lower_bound(n, q)) / n,
        encoder_rate_floor=floor,
    )


@dataclass(frozen=True)
class CodeCensus:
    """One enumerated code: its parameters, exact size, and the analytic
    bounds that apply to it (None where no bound applies)."""

    q: int
    n: int
    a: int
    b: int | None
    count: int
    size_lower: float | int | None
    size_upper: float | int | None


def census_rows(n: int, q: int = 2, limit: int | None = None) -> list[CodeCensus]:
    """Enumerate every code at one (n, q) shape, with applicable bounds.

    q = 2 selects the binary family (one row per a, size window bounds);
    q >= 3 gives one row per (a, b) with the constructive lower bound (when
    the shape supports it) and the single-deletion upper bound.
    """
    _check_int("q", q, 2)
    if q == 2:
        counts = binary_census(n) if limit is None else binary_census(n, limit)
        lo, hi = binary_size_bounds(n)
        return [
            CodeCensus(q=2, n=n, a=a, b=None, count=c, size_lower=lo, size_upper=hi)
            for a, c in enumerate(counts)
        ]
    grid = qary_census(n, q) if limit is None else qary_census(n, q, limit)
    try:
        lower = qary_size_lower_bound(n, q)
    except ParameterError:
        lower = None
    upper = float(single_deletion_size_bound(n, q))
    return [
        CodeCensus(q=q, n=n, a=a, b=b, count=grid[a][b], size_lower=lower, size_upper=upper)
        for a in range(n)
        for b in range(q)
    ]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def census_csv(rows: list[CodeCensus]) -> str:
    """Render census rows as CSV with the fixed column order CSV_COLUMNS."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [_cell(v) for v in (r.q, r.n, r.a, r.b, r.count, r.size_lower, r.size_upper)]
        )
    return buf.getvalue()


def census_report(
    n: int,
    q: int = 2,
    limit: int | None = None,
    a: int | None = None,
    b: int | None = None,
) -> dict:
    """JSON-ready census report: parameters, counts, bounds, rates.

    Optional a/b filters narrow the counts list; bounds and rates always
    describe the whole (n, q) shape.
    """
    rows = census_rows(n, q, limit)
    if a is not None:
        rows = [r for r in rows if r.a == a]
        if not rows:
            raise ParameterError(f"a={a} is out of range for n={n}")
    if b is not None:
        if q == 2:
            raise ParameterError("b applies to alphabets with q >= 3 only")
        rows = [r for r in rows if r.b == b]
        if not rows:
            raise ParameterError(f"b={b} is out of range for q={q}")
    def as_number(value):
        if isinstance(value, float):
            return round(value, 6)
        return value

    first = rows[0] if rows else None
    if q == 2:
        k = n - n.bit_length()
        rates = {
            "k": k,
            "encoder_rate": round(k / n, 6),
            "smallest_code_rate_bound": round(1 - math.log2(n + 1) / n, 6),
        }
    else:
        try:
            rates = rate_bounds(n, q).to_dict()
        except ParameterError:
            rates = None
    return {
        "parameters": {"q": q, "n": n},
        "counts": [{"a": r.a, "b": r.b, "count": r.count} for r in rows],
        "bounds": {
            "size_lower": None if first is None else as_number(first.size_lower),
            "size_upper": None if first is None else as_number(first.size_upper),
        },
        "rates": rates,
    }
