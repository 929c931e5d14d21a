"""q-ary two-deletion correcting code.

The sketch of a q-ary string protects the first matrix row with a
two-deletion provider sketch, the remaining rows with run-indexed VT
syndrome sums (solvable when the two deletions hit two distinct runs of
the first row) and with parity-split window sums of provider sketches
(peelable when both deletions fall inside one window).  The systematic
encoder chains the sketch through a regular-encoded second segment and a
3-fold repetition tail.
"""

from __future__ import annotations

from typing import NamedTuple, Union

from bisect import bisect_left

from .bits import (
    Interval,
    common_prefix_len,
    common_suffix_len,
    from_matrix,
    run_boundaries,
    runs_decompose,
    to_matrix,
    validate_qary,
)
from .encoders import lift_apply, lift_invert, qary_repr, qary_repr_invert, rep_decode, rep_encode
from .errors import DecodeFailure
from .params import PipelinePlan, TwodelStage
from .sketches import (
    PackedSketch,
    pack_tuple,
    twodel_decode,
    twodel_sketch,
    twodel_width,
    unpack_tuple,
    vt_sketch,
    vt_decode,
    vt_width,
)
from .windows import covering_window


class TwoDelSketch(NamedTuple):
    row1: PackedSketch   # two-deletion sketch of the first matrix row
    run_sum0: int        # sum of per-run row-syndrome tuples
    run_sum1: int        # index-weighted sum of the same tuples
    win_sum0: int        # window sums over even window indices
    win_sum1: int        # window sums over odd window indices


class TwoRuns(NamedTuple):
    run1: int
    run2: int


class Window(NamedTuple):
    span: Interval


DeletionCase = Union[TwoRuns, Window]


# ---------------------------------------------------------------------------
# deletion-pair analysis


def valid_deletion_pairs(c: str, b: str) -> list[tuple[int, int]]:
    """All position pairs {j1 < j2} whose deletion from c yields b.

    For each feasible first position the second positions form one
    contiguous interval, found by prefix/suffix matching against the
    remaining single-deletion problem.
    """
    n = len(c)
    if len(b) != n - 2:
        raise ValueError("not a two-deletion result")
    pairs = []
    lcp = common_prefix_len(c, b)
    for j1 in range(1, min(lcp + 1, n - 1) + 1):
        c1 = c[: j1 - 1] + c[j1:]
        lo = (n - 1) - common_suffix_len(c1, b)
        hi = common_prefix_len(c1, b) + 1
        for j in range(max(lo, j1), min(hi, n - 1) + 1):
            pairs.append((j1, j + 1))
    if not pairs:
        raise ValueError("not a two-deletion result")
    return pairs


def analyze_two_deletions(c: str, b: str) -> DeletionCase:
    """Classify how two deletions can map c onto b.

    If every valid pair deletes one symbol in each of the same two distinct
    runs, those runs identify the deletions well enough for run-wise
    recovery; otherwise all valid pairs lie inside one short interval.
    """
    n = len(c)
    bounds = run_boundaries(c)
    lcp = common_prefix_len(c, b)
    run_pairs: set[tuple[int, int]] = set()
    lo_pos = hi_pos = None
    for j1 in range(1, min(lcp + 1, n - 1) + 1):
        c1 = c[: j1 - 1] + c[j1:]
        lo = max((n - 1) - common_suffix_len(c1, b), j1)
        hi = min(common_prefix_len(c1, b) + 1, n - 1)
        if lo > hi:
            continue
        if lo_pos is None:
            lo_pos = j1
        hi_pos = max(hi_pos or 0, hi + 1)
        r1 = bisect_left(bounds, j1)
        for r2 in range(bisect_left(bounds, lo + 1), bisect_left(bounds, hi + 1) + 1):
            run_pairs.add((r1, r2))
    if lo_pos is None:
        raise ValueError("not a two-deletion result")
    if len(run_pairs) == 1:
        r1, r2 = next(iter(run_pairs))
        if r1 != r2:
            return TwoRuns(r1, r2)
    return Window(Interval(lo_pos, hi_pos))


# ---------------------------------------------------------------------------
# sketch


def _run_tuple(data_rows: list[str], lo: int, hi: int) -> int:
    """Packed VT syndromes of each data row restricted to [lo, hi]."""
    return pack_tuple([vt_sketch(row[lo - 1 : hi]) for row in data_rows]).value


def _window_tuple(data_rows: list[str], lo: int, hi: int, st: TwodelStage) -> int:
    return pack_tuple([
        twodel_sketch(row[lo - 1 : hi], st.provider, st.w_max, st.table_dir)
        for row in data_rows
    ]).value


def sketch(x, st: TwodelStage) -> TwoDelSketch:
    xs = validate_qary(x, st.q)
    if len(xs) != st.m:
        raise ValueError("expected length %d, got %d" % (st.m, len(xs)))
    rows = to_matrix(xs, st.q)
    c, data = rows[0], list(rows[1:])
    row1 = twodel_sketch(c, st.provider, st.w_max, st.table_dir)
    run_sum0 = run_sum1 = 0
    for i, run in enumerate(runs_decompose(c), start=1):
        g = _run_tuple(data, run.interval.lo, run.interval.hi)
        run_sum0 += g
        run_sum1 += i * g
    win_sum0 = win_sum1 = 0
    n2 = 1 << st.n2_width
    for j, w in enumerate(st.family.windows, start=1):
        h = _window_tuple(data, w.lo, w.hi, st)
        if j % 2 == 0:
            win_sum0 += h
        else:
            win_sum1 += h
    return TwoDelSketch(row1, run_sum0 % st.mod_g0, run_sum1 % st.mod_g1,
                        win_sum0 % n2, win_sum1 % n2)


def sketch_bits(sk: TwoDelSketch, st: TwodelStage) -> str:
    widths = st.widths
    packed = pack_tuple([
        PackedSketch(sk.row1.value, widths[0]),
        PackedSketch(sk.run_sum0, widths[1]),
        PackedSketch(sk.run_sum1, widths[2]),
        PackedSketch(sk.win_sum0, widths[3]),
        PackedSketch(sk.win_sum1, widths[4]),
    ])
    return format(packed.value, "0%db" % packed.width) if packed.width else ""


def parse_sketch(bits: str, st: TwodelStage) -> TwoDelSketch:
    if len(bits) != st.f_width:
        raise DecodeFailure("decode failure: sketch is %d bits, expected %d" % (len(bits), st.f_width))
    parts = unpack_tuple(int(bits, 2) if bits else 0, st.widths)
    return TwoDelSketch(PackedSketch(parts[0], st.widths[0]), parts[1], parts[2], parts[3], parts[4])


# ---------------------------------------------------------------------------
# recovery from two deletions


def _recover_two_runs(c: str, data: list[str], sk: TwoDelSketch, st: TwodelStage,
                      case: TwoRuns) -> list[str]:
    runs = runs_decompose(c)
    r1, r2 = case.run1, case.run2
    bounds = [0] + [run.interval.hi for run in runs]
    total0 = total1 = 0
    copied: dict[int, list[str]] = {}
    for j, run in enumerate(runs, start=1):
        if j == r1 or j == r2:
            continue
        shift = 0 if j < r1 else (1 if j < r2 else 2)
        segs = [row[run.interval.lo - 1 - shift : run.interval.hi - shift] for row in data]
        copied[j] = segs
        g = pack_tuple([vt_sketch(seg) for seg in segs]).value
        total0 += g
        total1 += j * g
    s0 = (sk.run_sum0 - total0) % st.mod_g0
    s1 = (sk.run_sum1 - total1) % st.mod_g1
    num = s1 - r1 * s0
    den = r2 - r1
    if num % den != 0:
        raise DecodeFailure("unrecoverable: run syndrome sums do not divide")
    g2 = num // den
    g1v = s0 - g2
    n1 = 1 << st.n1_width
    if not (0 <= g2 < n1 and 0 <= g1v < n1):
        raise DecodeFailure("unrecoverable: run syndromes out of range")
    decoded: dict[int, list[str]] = {}
    for run_idx, g in ((r1, g1v), (r2, g2)):
        length = runs[run_idx - 1].interval.length
        comps = unpack_tuple(g, [vt_width(length)] * len(data))
        if run_idx == r1:
            lo0, hi0 = bounds[r1 - 1], bounds[r1] - 1     # received segment, 0-based
        else:
            lo0, hi0 = bounds[r2 - 1] - 1, bounds[r2] - 2
        decoded[run_idx] = [
            vt_decode(row[lo0:hi0], PackedSketch(comps[i], vt_width(length)), length)
            for i, row in enumerate(data)
        ]
    out = []
    for i in range(len(data)):
        pieces = []
        for j in range(1, len(runs) + 1):
            if j in decoded:
                pieces.append(decoded[j][i])
            else:
                pieces.append(copied[j][i])
        out.append("".join(pieces))
    return out


def _recover_window(c: str, data: list[str], sk: TwoDelSketch, st: TwodelStage,
                    case: Window) -> list[str]:
    try:
        j0 = covering_window(st.family, case.span)
    except ValueError as exc:
        raise DecodeFailure("unrecoverable: %s" % exc) from exc
    w0 = st.family.window(j0)
    parity = j0 % 2
    total = 0
    for j, w in enumerate(st.family.windows, start=1):
        if j == j0 or j % 2 != parity:
            continue
        shift = 0 if j < j0 else 2
        total += pack_tuple([
            twodel_sketch(row[w.lo - 1 - shift : w.hi - shift], st.provider, st.w_max, st.table_dir)
            for row in data
        ]).value
    base = sk.win_sum1 if parity == 1 else sk.win_sum0
    h0 = (base - total) % (1 << st.n2_width)
    wlen = w0.length
    width = twodel_width(wlen, st.provider, st.w_max, st.table_dir)
    comps = unpack_tuple(h0, [width] * len(data))
    out = []
    for i, row in enumerate(data):
        seg = twodel_decode(row[w0.lo - 1 : w0.hi - 2], PackedSketch(comps[i], width),
                            wlen, st.provider, st.w_max, st.table_dir)
        out.append(row[: w0.lo - 1] + seg + row[w0.hi - 2 :])
    return out


def recover(y, sk: TwoDelSketch, st: TwodelStage) -> tuple:
    """Reconstruct the sketched string from any two deletions of it."""
    ys = validate_qary(y, st.q)
    if len(ys) != st.m - 2:
        raise DecodeFailure("decode failure: expected length %d, got %d" % (st.m - 2, len(ys)))
    rows_y = to_matrix(ys, st.q)
    c = twodel_decode(rows_y[0], sk.row1, st.m, st.provider, st.w_max, st.table_dir)
    if st.rows == 1:
        return from_matrix([c], st.q)
    case = analyze_two_deletions(c, rows_y[0])
    data = list(rows_y[1:])
    if isinstance(case, TwoRuns):
        new_rows = _recover_two_runs(c, data, sk, st, case)
    else:
        new_rows = _recover_window(c, data, sk, st, case)
    return from_matrix([c] + new_rows, st.q)


# ---------------------------------------------------------------------------
# systematic code


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
    tail = rep_encode(qary_repr(f2, q), plan.rep_t)
    return v + v2 + tail


def _tail_stage(tail, plan: PipelinePlan) -> TwoDelSketch:
    q = plan.params.q
    f2 = qary_repr_invert(rep_decode(tail, plan.rep_len, plan.rep_t),
                          plan.stage2.f_width, q)
    return parse_sketch(f2, plan.stage2)


def _mid_stage(mid, sk2: TwoDelSketch, plan: PipelinePlan) -> TwoDelSketch:
    q = plan.params.q
    v2 = recover(mid, sk2, plan.stage2)
    payload2 = lift_invert(plan.enc2.decode, v2, q, plan.enc2.capacity)
    if plan.pad2:
        if any(payload2[len(payload2) - plan.pad2 :]):
            raise DecodeFailure("decode failure: nonzero padding symbols")
        payload2 = payload2[: len(payload2) - plan.pad2]
    f1 = qary_repr_invert(payload2, plan.stage1.f_width, q)
    return parse_sketch(f1, plan.stage1)


def _head_stage(head, sk1: TwoDelSketch, plan: PipelinePlan) -> tuple:
    v = recover(head, sk1, plan.stage1)
    return lift_invert(plan.enc1.decode, v, plan.params.q, plan.message_len)


def decode(y, plan: PipelinePlan) -> tuple:
    ys = validate_qary(y, plan.params.q)
    if len(ys) != plan.m3 - 2:
        raise DecodeFailure("decode failure: expected length %d after two deletions, got %d"
                            % (plan.m3 - 2, len(ys)))
    sk2 = _tail_stage(ys[plan.m2 : plan.m3 - 2], plan)
    sk1 = _mid_stage(ys[plan.m1 : plan.m2 - 2], sk2, plan)
    return _head_stage(ys[: plan.m1 - 2], sk1, plan)


def staged_decoder(plan: PipelinePlan):
    """Decoder memoizing per-segment work; exhaustive drivers hit the same
    segment values over and over across deletion patterns."""
    tails: dict = {}
    mids: dict = {}
    heads: dict = {}

    def _decode(y) -> tuple:
        if len(y) != plan.m3 - 2:
            raise DecodeFailure("decode failure: expected length %d after two deletions, got %d"
                                % (plan.m3 - 2, len(y)))
        tail = y[plan.m2 : plan.m3 - 2]
        sk2 = tails.get(tail)
        if sk2 is None:
            sk2 = tails[tail] = _tail_stage(tail, plan)
        mid_key = (y[plan.m1 : plan.m2 - 2], sk2)
        sk1 = mids.get(mid_key)
        if sk1 is None:
            sk1 = mids[mid_key] = _mid_stage(mid_key[0], sk2, plan)
        head_key = (y[: plan.m1 - 2], sk1)
        u = heads.get(head_key)
        if u is None:
            u = heads[head_key] = _head_stage(head_key[0], sk1, plan)
        return u

    return _decode
