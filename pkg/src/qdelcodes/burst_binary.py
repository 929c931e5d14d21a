"""Binary code correcting one burst of at most t deletions.

The sketch pairs an occurrence-weight locator (narrowing the burst to an
interval that fits one window) with parity-split window sums of interleaved
VT burst sketches; the covering window's sketch is peeled from the sum of
its parity class and decoded.  The systematic encoder chains the sketch
through a density-encoded second segment and a (t+1)-fold repetition tail.
"""

from __future__ import annotations

from typing import NamedTuple

from .bits import validate_bits
from .encoders import rep_decode, rep_encode
from .errors import DecodeFailure, LocatorMismatchError
from .locator import LocatorSketch, locate_burst, locator_sketch
from .params import BinBurstStage, PipelinePlan
from .sketches import PackedSketch, burst_decode, burst_sketch, burst_sketch_width, pack_tuple, unpack_tuple
from .windows import covering_window


class BinBurstSketch(NamedTuple):
    locator: LocatorSketch
    win_sum0: int
    win_sum1: int


def sketch(c: str, st: BinBurstStage) -> BinBurstSketch:
    validate_bits(c)
    if len(c) != st.m:
        raise ValueError("expected length %d, got %d" % (st.m, len(c)))
    loc = locator_sketch(c, st.pattern)
    win_sum0 = win_sum1 = 0
    for j, w in enumerate(st.family.windows, start=1):
        phi = burst_sketch(c[w.lo - 1 : w.hi], st.t).value
        if j % 2 == 0:
            win_sum0 += phi
        else:
            win_sum1 += phi
    nb = 1 << st.nb_width
    return BinBurstSketch(loc, win_sum0 % nb, win_sum1 % nb)


def sketch_bits(sk: BinBurstSketch, st: BinBurstStage) -> str:
    widths = st.widths
    packed = pack_tuple([
        PackedSketch(sk.locator.count_mod, widths[0]),
        PackedSketch(sk.locator.shift_sum, widths[1]),
        PackedSketch(sk.win_sum0, widths[2]),
        PackedSketch(sk.win_sum1, widths[3]),
    ])
    return format(packed.value, "0%db" % packed.width)


def parse_sketch(bits: str, st: BinBurstStage) -> BinBurstSketch:
    if len(bits) != st.f_width:
        raise DecodeFailure("decode failure: sketch is %d bits, expected %d" % (len(bits), st.f_width))
    parts = unpack_tuple(int(bits, 2), st.widths)
    return BinBurstSketch(LocatorSketch(parts[0], parts[1], st.loc_modulus), parts[2], parts[3])


def recover(b: str, sk: BinBurstSketch, st: BinBurstStage) -> str:
    """Reconstruct the sketched pattern-dense string from a burst of at most
    t deletions of it."""
    validate_bits(b)
    tprime = st.m - len(b)
    if tprime == 0:
        return b
    if not (0 < tprime <= st.t):
        raise DecodeFailure("decode failure: burst of %d outside [0, %d]" % (tprime, st.t))
    try:
        span = locate_burst(b, sk.locator, st.m, st.pattern, st.delta, st.t)
        j0 = covering_window(st.family, span)
    except (LocatorMismatchError, ValueError) as exc:
        raise DecodeFailure("unrecoverable: %s" % exc) from exc
    w0 = st.family.window(j0)
    parity = j0 % 2
    total = 0
    for j, w in enumerate(st.family.windows, start=1):
        if j == j0 or j % 2 != parity:
            continue
        shift = 0 if j < j0 else tprime
        total += burst_sketch(b[w.lo - 1 - shift : w.hi - shift], st.t).value
    base = sk.win_sum1 if parity == 1 else sk.win_sum0
    phi0 = (base - total) % (1 << st.nb_width)
    wlen = w0.length
    seg = burst_decode(b[w0.lo - 1 : w0.hi - tprime],
                       PackedSketch(phi0, burst_sketch_width(wlen, st.t)), wlen, st.t)
    return b[: w0.lo - 1] + seg + b[w0.hi - tprime :]


def encode(a: str, plan: PipelinePlan) -> str:
    validate_bits(a)
    if len(a) != plan.message_len:
        raise ValueError("expected message of %d bits, got %d" % (plan.message_len, len(a)))
    s1 = plan.enc1.encode(a)
    f1 = sketch_bits(sketch(s1, plan.stage1), plan.stage1)
    s2 = plan.enc2.encode(f1 + "0" * plan.pad2)
    f2 = sketch_bits(sketch(s2, plan.stage2), plan.stage2)
    return s1 + s2 + rep_encode(f2, plan.rep_t)


def _tail_stage(tail: str, plan: PipelinePlan) -> BinBurstSketch:
    return parse_sketch(rep_decode(tail, plan.rep_len, plan.rep_t), plan.stage2)


def _mid_stage(mid: str, sk2: BinBurstSketch, plan: PipelinePlan) -> BinBurstSketch:
    s2 = recover(mid, sk2, plan.stage2)
    f1_padded = plan.enc2.decode(s2)
    if plan.pad2 and f1_padded[plan.stage1.f_width :].strip("0"):
        raise DecodeFailure("decode failure: nonzero padding bits")
    return parse_sketch(f1_padded[: plan.stage1.f_width], plan.stage1)


def _head_stage(head: str, sk1: BinBurstSketch, plan: PipelinePlan) -> str:
    return plan.enc1.decode(recover(head, sk1, plan.stage1))


def decode(d: str, plan: PipelinePlan) -> str:
    validate_bits(d)
    tprime = plan.m3 - len(d)
    if not (0 <= tprime <= plan.rep_t):
        raise DecodeFailure("decode failure: %d deletions outside [0, %d]" % (tprime, plan.rep_t))
    sk2 = _tail_stage(d[plan.m2 : plan.m3 - tprime], plan)
    sk1 = _mid_stage(d[plan.m1 : plan.m2 - tprime], sk2, plan)
    return _head_stage(d[: plan.m1 - tprime], sk1, plan)


def staged_decoder(plan: PipelinePlan):
    """Per-segment memoized decoder for exhaustive drivers."""
    tails: dict = {}
    mids: dict = {}
    heads: dict = {}

    def _decode(d: str) -> str:
        tprime = plan.m3 - len(d)
        if not (0 <= tprime <= plan.rep_t):
            raise DecodeFailure("decode failure: %d deletions outside [0, %d]" % (tprime, plan.rep_t))
        tail = d[plan.m2 : plan.m3 - tprime]
        sk2 = tails.get(tail)
        if sk2 is None:
            sk2 = tails[tail] = _tail_stage(tail, plan)
        mid_key = (d[plan.m1 : plan.m2 - tprime], sk2)
        sk1 = mids.get(mid_key)
        if sk1 is None:
            sk1 = mids[mid_key] = _mid_stage(mid_key[0], sk2, plan)
        head_key = (d[: plan.m1 - tprime], sk1)
        a = heads.get(head_key)
        if a is None:
            a = heads[head_key] = _head_stage(head_key[0], sk1, plan)
        return a

    return _decode
