"""Single-edit channel events and seeded end-to-end correction trials.

Each trial runs encode -> corrupt -> correct -> extract and succeeds when the
extracted bits equal the original message. Trial i draws from a random
stream derived from (seed, i), so runs are reproducible for a given seed and
order-independent across workers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from . import binary, qary
from .binary import BinaryVtParams
from .errors import ParameterError, UnsupportedParametersError, VtCodeError
from .qary import QaryVtParams
from .words import Word, check_symbols, format_bitstring

EVENT_KINDS = ("deletion", "insertion", "identity")
CHANNEL_KINDS = ("deletion", "insertion", "mixed", "identity")

CodeParams = Union[BinaryVtParams, QaryVtParams]


@dataclass(frozen=True)
class ChannelEvent:
    """One channel action: delete the symbol at `position`, insert `symbol`
    before `position`, or pass the word through (identity, no fields)."""

    kind: str
    position: int | None = None
    symbol: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in EVENT_KINDS:
            raise ParameterError(f"kind must be one of {EVENT_KINDS}, got {self.kind!r}")
        if self.kind == "identity":
            if self.position is not None or self.symbol is not None:
                raise ParameterError("identity events carry no position or symbol")
            return
        if not isinstance(self.position, int) or isinstance(self.position, bool) or self.position < 0:
            raise ParameterError(f"position must be a non-negative int, got {self.position!r}")
        if self.kind == "deletion":
            if self.symbol is not None:
                raise ParameterError("deletion events carry no symbol")
        else:
            if not isinstance(self.symbol, int) or isinstance(self.symbol, bool) or self.symbol < 0:
                raise ParameterError(f"insertion symbol must be a non-negative int, got {self.symbol!r}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "position": self.position, "symbol": self.symbol}


def apply_channel(word, event: ChannelEvent) -> Word:
    """Apply one event to a word. Deletion positions must lie in 0..len-1,
    insertion positions in 0..len; the caller guarantees the inserted symbol
    fits the word's alphabet."""
    w = check_symbols(word)
    if event.kind == "identity":
        return w
    if event.kind == "deletion":
        if event.position >= len(w):
            raise ParameterError(f"deletion position {event.position} out of range 0..{len(w) - 1}")
        return w[: event.position] + w[event.position + 1 :]
    if event.position > len(w):
        raise ParameterError(f"insertion position {event.position} out of range 0..{len(w)}")
    return w[: event.position] + (event.symbol,) + w[event.position :]


@dataclass(frozen=True)
class TrialFailure:
    """One failed trial: which trial, the message it sent, the channel event
    it suffered, and what went wrong."""

    trial: int
    message: Word
    event: ChannelEvent
    reason: str

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "message": format_bitstring(self.message),
            "event": self.event.to_dict(),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class TrialReport:
    """Aggregate of one run_trials call. wall_time is informational and
    excluded from equality, so identical (params, channel, trials, seed)
    runs compare equal."""

    params: CodeParams
    channel: str
    seed: int
    trials: int
    successes: int
    failure_cases: tuple[TrialFailure, ...]
    wall_time: float = field(compare=False)

    @property
    def rate(self) -> float:
        return self.successes / self.trials

    def params_dict(self) -> dict:
        if isinstance(self.params, QaryVtParams):
            return {"q": self.params.q, "n": self.params.n, "a": self.params.a, "b": self.params.b}
        return {"q": 2, "n": self.params.n, "a": self.params.a}

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "rate": self.rate,
            "params": self.params_dict(),
            "channel": self.channel,
            "seed": self.seed,
            "wall_time_s": self.wall_time,
            "failures": [f.to_dict() for f in self.failure_cases],
        }


def _codec_for(params: CodeParams):
    if isinstance(params, QaryVtParams):
        return qary.encode, qary.correct, qary.extract, params.q
    if isinstance(params, BinaryVtParams):
        return binary.encode, binary.correct, binary.extract, 2
    raise ParameterError(f"unsupported params object: {params!r}")


def run_trials(params: CodeParams, channel_kind: str, trials: int, seed: int) -> TrialReport:
    """Run seeded end-to-end trials and report successes and failures.

    Per trial: draw a uniform message, encode, draw a uniform event of the
    requested kind (mixed flips a fair coin between deletion and insertion),
    corrupt, correct, extract. Codec errors are recorded as failures rather
    than raised. Deterministic for fixed (params, channel_kind, trials, seed).
    """
    if channel_kind not in CHANNEL_KINDS:
        raise ParameterError(f"channel must be one of {CHANNEL_KINDS}, got {channel_kind!r}")
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise ParameterError(f"trials must be a positive int, got {trials!r}")
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ParameterError(f"seed must be a non-negative int, got {seed!r}")
    encode, correct, extract, q = _codec_for(params)
    if isinstance(params, QaryVtParams) and params.k == 0:
        raise UnsupportedParametersError(
            f"(n={params.n}, q={params.q}) carries no message bits to simulate"
        )
    n, k = params.n, params.k
    start = time.perf_counter()
    successes = 0
    failures: list[TrialFailure] = []
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        message = tuple(int(x) for x in rng.integers(0, 2, size=k))
        kind = channel_kind
        if kind == "mixed":
            kind = "deletion" if int(rng.integers(0, 2)) == 0 else "insertion"
        if kind == "deletion":
            event = ChannelEvent("deletion", position=int(rng.integers(0, n)))
        elif kind == "insertion":
            event = ChannelEvent(
                "insertion",
                position=int(rng.integers(0, n + 1)),
                symbol=int(rng.integers(0, q)),
            )
        else:
            event = ChannelEvent("identity")
        try:
            received = apply_channel(encode(message, params), event)
            decoded = extract(correct(received, params), params)
        except VtCodeError as exc:
            failures.append(TrialFailure(i, message, event, f"{type(exc).__name__}: {exc}"))
            continue
        if decoded == message:
            successes += 1
        else:
            failures.append(TrialFailure(i, message, event, "extracted message differs"))
    wall = time.perf_counter() - start
    failures.sort(key=lambda f: f.trial)
    return TrialReport(
        params=params,
        channel=channel_kind,
        seed=seed,
        trials=trials,
        successes=successes,
        failure_cases=tuple(failures),
        wall_time=wall,
    )
