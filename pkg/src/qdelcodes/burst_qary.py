"""q-ary code correcting one burst of at most t deletions.

Recovery runs in three steps: the first matrix row (kept pattern-dense by
the encoder) is recovered by the binary burst machinery; the deleted
columns are then confined to the maximal constant-period interval around
any one burst explaining the row, which density keeps shorter than the
window stride; finally the covering window's interleaved-VT sketch tuple is
peeled from its parity-class sum and each remaining row segment decoded.
"""

from __future__ import annotations

from typing import NamedTuple

from . import burst_binary
from .bits import from_matrix, to_matrix, validate_qary
from .encoders import lift_apply, lift_invert, qary_repr, qary_repr_invert, rep_decode, rep_encode
from .errors import DecodeFailure
from .locator import period_localize
from .params import PipelinePlan, QBurstStage
from .sketches import PackedSketch, burst_decode, burst_sketch, burst_sketch_width, pack_tuple, unpack_tuple
from .windows import covering_window


class QBurstSketch(NamedTuple):
    row1: burst_binary.BinBurstSketch
    win_sum0: int
    win_sum1: int


def sketch(x, st: QBurstStage) -> QBurstSketch:
    xs = validate_qary(x, st.q)
    if len(xs) != st.m:
        raise ValueError("expected length %d, got %d" % (st.m, len(xs)))
    rows = to_matrix(xs, st.q)
    row1 = burst_binary.sketch(rows[0], st.row_stage)
    data = rows[1:]
    win_sum0 = win_sum1 = 0
    for j, w in enumerate(st.family.windows, start=1):
        h = pack_tuple([burst_sketch(row[w.lo - 1 : w.hi], st.row_stage.t) for row in data]).value
        if j % 2 == 0:
            win_sum0 += h
        else:
            win_sum1 += h
    nbar = 1 << st.nbar_width
    return QBurstSketch(row1, win_sum0 % nbar, win_sum1 % nbar)


def sketch_bits(sk: QBurstSketch, st: QBurstStage) -> str:
    row_bits = burst_binary.sketch_bits(sk.row1, st.row_stage)
    packed = pack_tuple([
        PackedSketch(sk.win_sum0, st.nbar_width),
        PackedSketch(sk.win_sum1, st.nbar_width),
    ])
    tail = format(packed.value, "0%db" % packed.width) if packed.width else ""
    return row_bits + tail


def parse_sketch(bits: str, st: QBurstStage) -> QBurstSketch:
    if len(bits) != st.f_width:
        raise DecodeFailure("decode failure: sketch is %d bits, expected %d" % (len(bits), st.f_width))
    row_width = st.row_stage.f_width
    row1 = burst_binary.parse_sketch(bits[:row_width], st.row_stage)
    rest = bits[row_width:]
    sums = unpack_tuple(int(rest, 2) if rest else 0, (st.nbar_width, st.nbar_width))
    return QBurstSketch(row1, sums[0], sums[1])


def recover(y, sk: QBurstSketch, st: QBurstStage) -> tuple:
    ys = validate_qary(y, st.q)
    tprime = st.m - len(ys)
    if tprime == 0:
        return ys
    if not (0 < tprime <= st.row_stage.t):
        raise DecodeFailure("decode failure: burst of %d outside [0, %d]" % (tprime, st.row_stage.t))
    rows_y = to_matrix(ys, st.q)
    c = burst_binary.recover(rows_y[0], sk.row1, st.row_stage)
    if st.rows == 1:
        return from_matrix([c], st.q)
    try:
        span = period_localize(c, rows_y[0])
        j0 = covering_window(st.family, span)
    except ValueError as exc:
        raise DecodeFailure("unrecoverable: %s" % exc) from exc
    w0 = st.family.window(j0)
    parity = j0 % 2
    data = list(rows_y[1:])
    t = st.row_stage.t
    total = 0
    for j, w in enumerate(st.family.windows, start=1):
        if j == j0 or j % 2 != parity:
            continue
        shift = 0 if j < j0 else tprime
        total += pack_tuple([
            burst_sketch(row[w.lo - 1 - shift : w.hi - shift], t) for row in data
        ]).value
    base = sk.win_sum1 if parity == 1 else sk.win_sum0
    h0 = (base - total) % (1 << st.nbar_width)
    wlen = w0.length
    width = burst_sketch_width(wlen, t)
    comps = unpack_tuple(h0, [width] * len(data))
    new_rows = []
    for i, row in enumerate(data):
        seg = burst_decode(row[w0.lo - 1 : w0.hi - tprime], PackedSketch(comps[i], width), wlen, t)
        new_rows.append(row[: w0.lo - 1] + seg + row[w0.hi - tprime :])
    return from_matrix([c] + new_rows, st.q)


def encode(u, plan: PipelinePlan) -> tuple:
    q = plan.params.q
    us = validate_qary(u, q)
    if len(us) != plan.message_len:
        raise ValueError("expected message of %d symbols, got %d" % (plan.message_len, len(us)))
    v = lift_apply(plan.enc1.encode, us, q, plan.m1)
    f1 = sketch_bits(sketch(v, plan.stage1), plan.stage1)
    payload2 = qary_repr(f1, q) + (0,) * plan.pad2
    v2 = lift_apply(plan.enc2.encode, payload2, q, plan.stage2.m)
    f2 = sketch_bits(sketch(v2, plan.stage2), plan.stage2)
    return v + v2 + rep_encode(qary_repr(f2, q), plan.rep_t)


def _tail_stage(tail, plan: PipelinePlan) -> QBurstSketch:
    q = plan.params.q
    f2 = qary_repr_invert(rep_decode(tail, plan.rep_len, plan.rep_t),
                          plan.stage2.f_width, q)
    return parse_sketch(f2, plan.stage2)


def _mid_stage(mid, sk2: QBurstSketch, plan: PipelinePlan) -> QBurstSketch:
    q = plan.params.q
    v2 = recover(mid, sk2, plan.stage2)
    payload2 = lift_invert(plan.enc2.decode, v2, q, plan.enc2.capacity)
    if plan.pad2:
        if any(payload2[len(payload2) - plan.pad2 :]):
            raise DecodeFailure("decode failure: nonzero padding symbols")
        payload2 = payload2[: len(payload2) - plan.pad2]
    f1 = qary_repr_invert(payload2, plan.stage1.f_width, q)
    return parse_sketch(f1, plan.stage1)


def _head_stage(head, sk1: QBurstSketch, plan: PipelinePlan) -> tuple:
    v = recover(head, sk1, plan.stage1)
    return lift_invert(plan.enc1.decode, v, plan.params.q, plan.message_len)


def decode(y, plan: PipelinePlan) -> tuple:
    ys = validate_qary(y, plan.params.q)
    tprime = plan.m3 - len(ys)
    if not (0 <= tprime <= plan.rep_t):
        raise DecodeFailure("decode failure: %d deletions outside [0, %d]" % (tprime, plan.rep_t))
    sk2 = _tail_stage(ys[plan.m2 : plan.m3 - tprime], plan)
    sk1 = _mid_stage(ys[plan.m1 : plan.m2 - tprime], sk2, plan)
    return _head_stage(ys[: plan.m1 - tprime], sk1, plan)


def staged_decoder(plan: PipelinePlan):
    """Per-segment memoized decoder for exhaustive drivers."""
    tails: dict = {}
    mids: dict = {}
    heads: dict = {}

    def _decode(y) -> tuple:
        tprime = plan.m3 - len(y)
        if not (0 <= tprime <= plan.rep_t):
            raise DecodeFailure("decode failure: %d deletions outside [0, %d]" % (tprime, plan.rep_t))
        tail = y[plan.m2 : plan.m3 - tprime]
        sk2 = tails.get(tail)
        if sk2 is None:
            sk2 = tails[tail] = _tail_stage(tail, plan)
        mid_key = (y[plan.m1 : plan.m2 - tprime], sk2)
        sk1 = mids.get(mid_key)
        if sk1 is None:
            sk1 = mids[mid_key] = _mid_stage(mid_key[0], sk2, plan)
        head_key = (y[: plan.m1 - tprime], sk1)
        u = heads.get(head_key)
        if u is None:
            u = heads[head_key] = _head_stage(head_key[0], sk1, plan)
        return u

    return _decode
