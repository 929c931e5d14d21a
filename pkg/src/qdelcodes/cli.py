"""Command-line interface.

Subcommands: encode, decode, corrupt, verify, report, selftest.  Strings
travel as text (01 strings for q=2, space-separated digits otherwise, hex
via --hex) or inside self-describing QDEL files.  Exit codes: 0 success,
1 decode/verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import burst_binary, burst_qary, twodel
from .channel import corrupt_burst, corrupt_deletions
from .errors import CodecError, ParameterError
from .fileformat import (
    KIND_CODEWORD,
    KIND_MESSAGE,
    KIND_RECEIVED,
    format_string,
    parse_string,
    read_payload,
    write_payload,
)
from .params import MODE_BURST_BIN, MODE_BURST_Q, MODE_TWODEL, MODES, CodeParams, resolve
from .report import render_full_report
from .sketches import PROVIDERS, VERBATIM
from .verify import roundtrip_exhaustive, roundtrip_random

_MODE_OPS = {
    MODE_TWODEL: twodel,
    MODE_BURST_BIN: burst_binary,
    MODE_BURST_Q: burst_qary,
}


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--mode", choices=MODES, help="code construction")
    sub.add_argument("--n", type=int, help="first-segment length")
    sub.add_argument("--q", type=int, default=2, help="alphabet size (even)")
    sub.add_argument("--t", type=int, default=2, help="burst bound")
    sub.add_argument("--provider", choices=PROVIDERS, default=VERBATIM)
    sub.add_argument("--w-max", type=int, default=14)
    sub.add_argument("--lam", type=int, default=2)
    sub.add_argument("--reg-window", type=int)
    sub.add_argument("--rho", type=int)
    sub.add_argument("--delta", type=int)
    sub.add_argument("--delta-prime", type=int)
    sub.add_argument("--table-dir", help="cache directory for coloring tables")
    sub.add_argument("--params-file", help="JSON file with parameter fields")


def _params_from_args(args) -> CodeParams:
    fields = {}
    if args.params_file:
        with open(args.params_file) as fh:
            fields.update(json.load(fh))
    for key in ("mode", "n", "q", "t", "provider", "w_max", "lam",
                "reg_window", "rho", "delta", "delta_prime", "table_dir"):
        value = getattr(args, key, None)
        if value is not None:
            fields[key] = value
    if "mode" not in fields or "n" not in fields:
        raise ParameterError("--mode and --n are required (flags or params file)")
    return CodeParams(**fields)


def _read_input(args, q: int):
    if args.infile:
        payload = read_payload(args.infile)
        return payload.symbols if q > 2 else "".join(str(s) for s in payload.symbols)
    text = args.text if args.text is not None else sys.stdin.read()
    return parse_string(text, q, args.hex)


def _emit(args, params: CodeParams, kind: int, value) -> None:
    if args.outfile:
        write_payload(args.outfile, params, kind, value)
    else:
        print(format_string(value, params.q, args.hex))


def cmd_encode(args) -> int:
    params = _params_from_args(args)
    plan = resolve(params)
    ops = _MODE_OPS[params.mode]
    message = _read_input(args, params.q)
    if params.q == 2 and params.mode != MODE_BURST_BIN:
        message = tuple(int(ch) for ch in message)
    codeword = ops.encode(message, plan)
    _emit(args, params, KIND_CODEWORD, codeword)
    return 0


def cmd_decode(args) -> int:
    if args.infile:
        payload = read_payload(args.infile)
        params = payload.params
        received = payload.symbols if params.q > 2 else "".join(str(s) for s in payload.symbols)
    else:
        params = _params_from_args(args)
        received = parse_string(args.text if args.text is not None else sys.stdin.read(),
                                params.q, args.hex)
    plan = resolve(params)
    ops = _MODE_OPS[params.mode]
    if params.q == 2 and params.mode != MODE_BURST_BIN:
        received = tuple(int(ch) for ch in received)
    try:
        message = ops.decode(received, plan)
    except CodecError as exc:
        print("decode failure: %s" % exc, file=sys.stderr)
        return 1
    _emit(args, params, KIND_MESSAGE, message)
    return 0


def cmd_corrupt(args) -> int:
    params = _params_from_args(args)
    word = _read_input(args, params.q)
    if params.q == 2 and params.mode != MODE_BURST_BIN:
        word = tuple(int(ch) for ch in word)
    if args.deletions is not None:
        result, positions = corrupt_deletions(word, args.deletions, args.seed)
    else:
        result, positions = corrupt_burst(word, args.burst if args.burst is not None else params.t,
                                          args.seed)
    print("deleted positions: %s" % (list(positions),), file=sys.stderr)
    _emit(args, params, KIND_RECEIVED, result)
    return 0


def cmd_verify(args) -> int:
    params = _params_from_args(args)
    plan = resolve(params)
    if args.scope == "exhaustive":
        report = roundtrip_exhaustive(plan, message_limit=args.message_limit)
    else:
        report = roundtrip_random(plan, trials=args.trials, seed=args.seed)
    print(report.summary())
    for failure in report.failures[:20]:
        print("  failure: %s" % (failure,))
    return 0 if report.ok else 1


def cmd_report(args) -> int:
    print(render_full_report(args.n, args.q, args.t, args.provider), end="")
    return 0


def cmd_selftest(args) -> int:
    configs = [
        CodeParams(mode=MODE_TWODEL, n=5, q=4, provider="colored", w_max=16),
        CodeParams(mode=MODE_BURST_BIN, n=22, q=2, t=2, delta=12, lam=2),
        CodeParams(mode=MODE_BURST_Q, n=14, q=4, t=2, delta=12, lam=2),
    ]
    failed = 0
    for params in configs:
        report = roundtrip_exhaustive(resolve(params), message_limit=args.message_limit)
        print(report.summary())
        failed += len(report.failures)
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qdel",
                                     description="q-ary two-deletion and burst-deletion codes")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("encode", cmd_encode), ("decode", cmd_decode), ("corrupt", cmd_corrupt)):
        sub = subs.add_parser(name)
        _add_param_flags(sub)
        sub.add_argument("--in", dest="infile", help="QDEL input file")
        sub.add_argument("--out", dest="outfile", help="QDEL output file")
        sub.add_argument("--text", help="inline input string")
        sub.add_argument("--hex", action="store_true", help="binary strings as hex")
        if name == "corrupt":
            sub.add_argument("--deletions", type=int)
            sub.add_argument("--burst", type=int)
            sub.add_argument("--seed", type=int, default=0)
        sub.set_defaults(func=fn)

    sub = subs.add_parser("verify")
    _add_param_flags(sub)
    sub.add_argument("--scope", choices=("exhaustive", "random"), default="exhaustive")
    sub.add_argument("--trials", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--message-limit", type=int)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("report")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--q", type=int, default=2)
    sub.add_argument("--t", type=int, default=2)
    sub.add_argument("--provider", choices=PROVIDERS, default=VERBATIM)
    sub.set_defaults(func=cmd_report)

    sub = subs.add_parser("selftest")
    sub.add_argument("--message-limit", type=int, default=40)
    sub.set_defaults(func=cmd_selftest)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print("parameter error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
