"""Round-trip verification drivers.

The exhaustive driver walks every message and every deletion/burst pattern
of the code, decoding each distinct corrupted word once through a
per-codeword memoized decoder (spot-checked against the plain decoder).
The random driver samples seeded corruptions through the plain decoder.
Failures carry enough information to reproduce them directly.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from . import burst_binary, burst_qary, twodel
from .channel import corrupt_burst, corrupt_deletions
from .errors import CodecError
from .params import MODE_BURST_BIN, MODE_BURST_Q, MODE_TWODEL, PipelinePlan

_MODE_OPS = {
    MODE_TWODEL: twodel,
    MODE_BURST_BIN: burst_binary,
    MODE_BURST_Q: burst_qary,
}

_SELF_CHECK_EVERY = 97  # staged decode is re-run through the plain decoder this often


@dataclass
class VerifyReport:
    mode: str
    scope: str
    messages: int
    cases: int              # distinct corrupted words decoded
    patterns: int = 0       # raw deletion/burst patterns covered
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL (%d)" % len(self.failures)
        return "%s %s: %d messages, %d patterns (%d distinct words), %.1fs: %s" % (
            self.mode, self.scope, self.messages, self.patterns, self.cases,
            self.elapsed, status)


def iter_messages(plan: PipelinePlan):
    if plan.mode == MODE_BURST_BIN:
        for bits in itertools.product("01", repeat=plan.message_len):
            yield "".join(bits)
    else:
        yield from itertools.product(range(plan.params.q), repeat=plan.message_len)


def _distinct_two_deletions(x):
    seen = {}
    n = len(x)
    for i in range(n - 1):
        xi = x[:i] + x[i + 1 :]
        for j in range(i, n - 1):
            y = xi[:j] + xi[j + 1 :]
            if y not in seen:
                seen[y] = (i + 1, j + 2)
    return seen


def _distinct_bursts(x, t):
    seen = {x: (0, 0)}
    for tp in range(1, t + 1):
        for start in range(1, len(x) - tp + 2):
            y = x[: start - 1] + x[start - 1 + tp :]
            if y not in seen:
                seen[y] = (start, tp)
    return seen


def roundtrip_exhaustive(plan: PipelinePlan, message_limit: int | None = None) -> VerifyReport:
    """Every message x every deletion/burst pattern; failures keep reproducers."""
    ops = _MODE_OPS[plan.mode]
    report = VerifyReport(plan.mode, "exhaustive", 0, 0)
    start_time = time.time()
    tick = 0
    for u in iter_messages(plan):
        if message_limit is not None and report.messages >= message_limit:
            break
        report.messages += 1
        x = ops.encode(u, plan)
        staged = ops.staged_decoder(plan)
        if plan.mode == MODE_TWODEL:
            cases = _distinct_two_deletions(x)
            report.patterns += len(x) * (len(x) - 1) // 2
        else:
            cases = _distinct_bursts(x, plan.rep_t)
            report.patterns += 1 + sum(len(x) - tp + 1 for tp in range(1, plan.rep_t + 1))
        for y, truth in cases.items():
            report.cases += 1
            tick += 1
            try:
                got = staged(y)
                ok = got == u
            except CodecError as exc:
                got = repr(exc)
                ok = False
            if tick % _SELF_CHECK_EVERY == 0:
                plain = ops.decode(y, plan)
                if plain != got:
                    report.failures.append(
                        {"message": u, "where": truth, "error": "staged/plain decoder disagreement"})
                    continue
            if not ok:
                report.failures.append({"message": u, "where": truth, "got": got})
    report.elapsed = time.time() - start_time
    return report


def roundtrip_random(plan: PipelinePlan, trials: int, seed: int = 0) -> VerifyReport:
    """Seeded random messages and corruptions through the plain decoder."""
    import random

    ops = _MODE_OPS[plan.mode]
    rng = random.Random(seed)
    report = VerifyReport(plan.mode, "random", 0, 0)
    start_time = time.time()
    for trial in range(trials):
        if plan.mode == MODE_BURST_BIN:
            u = "".join(rng.choice("01") for _ in range(plan.message_len))
        else:
            u = tuple(rng.randrange(plan.params.q) for _ in range(plan.message_len))
        x = ops.encode(u, plan)
        case_seed = rng.randrange(1 << 30)
        if plan.mode == MODE_TWODEL:
            y, positions = corrupt_deletions(x, 2, case_seed)
        else:
            y, positions = corrupt_burst(x, plan.rep_t, case_seed)
        report.messages += 1
        report.cases += 1
        report.patterns += 1
        try:
            got = ops.decode(y, plan)
            ok = got == u
        except CodecError as exc:
            got = repr(exc)
            ok = False
        if not ok:
            report.failures.append(
                {"trial": trial, "seed": case_seed, "positions": positions, "got": got})
    report.elapsed = time.time() - start_time
    return report
