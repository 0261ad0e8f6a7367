"""Command-line front end.

Subcommands: encode, extract, correct, member, enumerate, bounds, simulate,
tables, validate-positions. Binary codes are selected with --q 2 (no --b);
alphabets q >= 3 take both --a and --b. Codewords are space-separated decimal
symbols, messages are contiguous bit strings, and --json switches any
subcommand to machine-readable output.

Exit codes: 0 success, 1 usage or parameter error, 2 codec failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import analysis, binary, channel, qary
from .binary import BinaryVtParams
from .errors import CodecError, ParameterError
from .qary import QaryVtParams, pair_table
from .words import format_bitstring, format_symbols, parse_bitstring, parse_symbols

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CODEC = 2


def _make_params(args) -> BinaryVtParams | QaryVtParams:
    if args.q == 2:
        if getattr(args, "b", None) is not None:
            raise ParameterError("--b applies to alphabets with q >= 3 only")
        return BinaryVtParams(n=args.n, a=args.a)
    if getattr(args, "b", None) is None:
        raise ParameterError("--b is required for alphabets with q >= 3")
    return QaryVtParams(n=args.n, q=args.q, a=args.a, b=args.b)


def _cmd_encode(args):
    params = _make_params(args)
    message = parse_bitstring(args.message)
    if isinstance(params, BinaryVtParams):
        word = binary.encode(message, params)
    else:
        word = qary.encode(message, params)
    return format_symbols(word), {"codeword": list(word)}


def _cmd_extract(args):
    params = _make_params(args)
    word = parse_symbols(args.word)
    if isinstance(params, BinaryVtParams):
        message = binary.extract(word, params)
    else:
        message = qary.extract(word, params)
    text = format_bitstring(message)
    return text, {"message": text}


def _cmd_correct(args):
    params = _make_params(args)
    received = parse_symbols(args.word)
    if isinstance(params, BinaryVtParams):
        word = binary.correct(received, params)
    else:
        word = qary.correct(received, params)
    edit = {-1: "deletion", 0: "none", 1: "insertion"}[len(received) - params.n]
    return format_symbols(word), {"codeword": list(word), "edit": edit}


def _cmd_member(args):
    params = _make_params(args)
    word = parse_symbols(args.word)
    if isinstance(params, BinaryVtParams):
        if len(word) != params.n:
            raise ParameterError(f"expected a word of length {params.n}, got {len(word)}")
        ok = binary.is_member(word, params.a)
    else:
        ok = qary.is_member(word, params)
    return ("true" if ok else "false"), {"member": ok}


def _cmd_enumerate(args):
    report = analysis.census_report(args.n, args.q, limit=args.limit, a=args.a, b=args.b)
    rows = analysis.census_rows(args.n, args.q, args.limit)
    if args.a is not None:
        rows = [r for r in rows if r.a == args.a]
    if args.b is not None:
        rows = [r for r in rows if r.b == args.b]
    return analysis.census_csv(rows), report


def _cmd_bounds(args):
    n, q = args.n, args.q
    if q == 2:
        k = n - n.bit_length()
        lo, hi = analysis.binary_size_bounds(n)
        payload = {
            "q": 2,
            "n": n,
            "k": k,
            "encoder_rate": round(k / n, 6),
            "smallest_code_rate_bound": round(1 - math.log2(n + 1) / n, 6),
            "size_lower": round(lo, 6),
            "size_upper": round(hi, 6),
        }
    else:
        report = analysis.rate_bounds(n, q)
        payload = report.to_dict()
        payload["size_lower_bound"] = analysis.qary_size_lower_bound(n, q)
        payload["single_deletion_size_bound"] = round(
            float(analysis.single_deletion_size_bound(n, q)), 6
        )
    text = "\n".join(
        f"{key} = {value}" for key, value in payload.items() if value is not None
    )
    return text, payload


def _cmd_simulate(args):
    params = _make_params(args)
    report = channel.run_trials(params, args.channel, args.trials, args.seed)
    text = (
        f"trials={report.trials} successes={report.successes} "
        f"rate={report.rate:.6f} failures={len(report.failure_cases)} "
        f"wall_time_s={report.wall_time:.3f}"
    )
    return text, report.to_dict()


def _cmd_tables(args):
    table = pair_table(args.q)
    lines = [
        f"q = {table.q}",
        f"pair_bits = {table.pair_bits}",
        f"single_bits = {table.single_bits}",
    ]
    lines += [f"pair {i} = {left} {right}" for i, (left, right) in enumerate(table.pairs)]
    lines += [f"single {i} = {value}" for i, value in enumerate(table.singles)]
    payload = {
        "q": table.q,
        "pair_bits": table.pair_bits,
        "single_bits": table.single_bits,
        "pairs": [list(p) for p in table.pairs],
        "singles": list(table.singles),
    }
    return "\n".join(lines), payload


def _cmd_validate_positions(args):
    positions = parse_symbols(args.positions)
    ok = binary.validate_syndrome_positions(args.n, positions)
    return ("true" if ok else "false"), {"valid": ok}


def _add_code_flags(sub, with_b=True):
    sub.add_argument("--q", type=int, required=True, help="alphabet size (2 = binary)")
    sub.add_argument("--n", type=int, required=True, help="code length")
    sub.add_argument("--a", type=int, required=True, help="target checksum residue")
    if with_b:
        sub.add_argument("--b", type=int, default=None, help="target symbol-sum residue (q >= 3)")


def _add_json_flag(sub):
    sub.add_argument("--json", action="store_true", help="emit machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vtcodes",
        description="Systematic encoding, correction, and analysis of "
        "single-deletion/insertion correcting codes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("encode", help="encode a bit-string message into a codeword")
    _add_code_flags(sub)
    sub.add_argument("--message", required=True, help="message bits, e.g. 10110")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_encode)

    sub = subs.add_parser("extract", help="read the message bits back out of a codeword")
    _add_code_flags(sub)
    sub.add_argument("--word", required=True, help="codeword symbols, e.g. '0 1 2 3'")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_extract)

    sub = subs.add_parser(
        "correct", help="repair a received word (edit type inferred from its length)"
    )
    _add_code_flags(sub)
    sub.add_argument("--word", required=True, help="received symbols")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_correct)

    sub = subs.add_parser("member", help="test whether a word lies in the code")
    _add_code_flags(sub)
    sub.add_argument("--word", required=True, help="word symbols")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_member)

    sub = subs.add_parser("enumerate", help="census of code sizes by brute force (CSV)")
    sub.add_argument("--q", type=int, required=True, help="alphabet size (2 = binary)")
    sub.add_argument("--n", type=int, required=True, help="code length")
    sub.add_argument("--a", type=int, default=None, help="restrict to one checksum residue")
    sub.add_argument("--b", type=int, default=None, help="restrict to one sum residue (q >= 3)")
    sub.add_argument("--limit", type=int, default=None, help="override the enumeration size limit")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_enumerate)

    sub = subs.add_parser("bounds", help="size and rate bounds for one code shape")
    sub.add_argument("--q", type=int, required=True, help="alphabet size (2 = binary)")
    sub.add_argument("--n", type=int, required=True, help="code length")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_bounds)

    sub = subs.add_parser("simulate", help="seeded encode/corrupt/correct/extract trials")
    _add_code_flags(sub)
    sub.add_argument(
        "--channel",
        choices=channel.CHANNEL_KINDS,
        default="mixed",
        help="event kind per trial (default: mixed)",
    )
    sub.add_argument("--trials", type=int, required=True, help="number of trials (>= 1)")
    sub.add_argument("--seed", type=int, required=True, help="base seed")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_simulate)

    sub = subs.add_parser("tables", help="dump the canonical message-value tables")
    sub.add_argument("--q", type=int, required=True, help="alphabet size (>= 3)")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_tables)

    sub = subs.add_parser(
        "validate-positions", help="check that positions can absorb any checksum deficit"
    )
    sub.add_argument("--n", type=int, required=True, help="code length")
    sub.add_argument("--positions", required=True, help="candidate positions, e.g. '1 2 4'")
    _add_json_flag(sub)
    sub.set_defaults(handler=_cmd_validate_positions)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        text, payload = args.handler(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODEC
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return EXIT_OK
