import itertools
import random

import pytest

from qdelcodes.bits import Interval, deletion_ball, delete_positions, runs_decompose
from qdelcodes.errors import DecodeFailure
from qdelcodes.params import CodeParams, resolve, MODE_TWODEL, _twodel_stage
from qdelcodes.twodel import (
    TwoRuns,
    Window,
    analyze_two_deletions,
    decode,
    encode,
    parse_sketch,
    recover,
    sketch,
    sketch_bits,
    valid_deletion_pairs,
)

APPENDIX_STRING = "011000101011110100"


def all_bits(n):
    return ("".join(t) for t in itertools.product("01", repeat=n))


def brute_pairs(c, b):
    n = len(c)
    return sorted(
        (j1, j2)
        for j1, j2 in itertools.combinations(range(1, n + 1), 2)
        if delete_positions(c, (j1, j2)) == b
    )


def test_valid_pairs_match_bruteforce():
    for n in range(3, 11):
        for c in itertools.islice(all_bits(n), 0, None, 3):
            for b in deletion_ball(c, 2):
                assert sorted(valid_deletion_pairs(c, b)) == brute_pairs(c, b)


def test_analyzer_appendix_examples():
    c = APPENDIX_STRING
    runs = runs_decompose(c)

    case = analyze_two_deletions(c, "0110010011110100")
    assert isinstance(case, TwoRuns)
    assert runs[case.run1 - 1].interval == Interval(4, 6)
    assert runs[case.run2 - 1].interval == Interval(9, 9)

    case = analyze_two_deletions(c, "0110101011110100")
    assert isinstance(case, Window)
    assert case.span == Interval(4, 6)

    case = analyze_two_deletions(c, "0100101011110100")
    assert isinstance(case, TwoRuns)
    assert runs[case.run1 - 1].interval == Interval(2, 3)
    assert runs[case.run2 - 1].interval == Interval(4, 6)

    case = analyze_two_deletions(c, "0110001011110100")
    assert isinstance(case, Window)
    assert case.span == Interval(4, 14)


def test_analyzer_consistent_with_valid_pairs_exhaustive():
    # the returned case always describes every valid pair
    for n in range(3, 12):
        for c in itertools.islice(all_bits(n), 0, None, 5):
            runs = runs_decompose(c)
            starts = {r.interval.lo: i + 1 for i, r in enumerate(runs)}
            run_of = []
            k = 0
            for pos in range(1, n + 1):
                if pos in starts:
                    k = starts[pos]
                run_of.append(k)
            for b in deletion_ball(c, 2):
                case = analyze_two_deletions(c, b)
                pairs = brute_pairs(c, b)
                if isinstance(case, TwoRuns):
                    for j1, j2 in pairs:
                        assert {run_of[j1 - 1], run_of[j2 - 1]} == {case.run1, case.run2}
                    assert case.run1 != case.run2
                else:
                    for j1, j2 in pairs:
                        assert case.span.contains_pos(j1) and case.span.contains_pos(j2)
                    assert case.span.lo == min(p for pr in pairs for p in pr)
                    assert case.span.hi == max(p for pr in pairs for p in pr)


DESK = CodeParams(mode=MODE_TWODEL, n=6, q=4, provider="colored", w_max=16)


def test_sketch_widths_follow_stage():
    plan = resolve(DESK)
    st = plan.stage1
    for u in itertools.islice(itertools.product(range(4), repeat=st.m), 64):
        sk = sketch(u, st)
        bits = sketch_bits(sk, st)
        assert len(bits) == st.f_width
        assert parse_sketch(bits, st) == sk


def test_sketch_q2_reduces_to_row_sketch():
    p = CodeParams(mode=MODE_TWODEL, n=8, q=2, provider="colored", w_max=16)
    st = _twodel_stage(8, p)
    for c in itertools.islice(all_bits(8), 40):
        sk = sketch(tuple(int(ch) for ch in c), st)
        assert sk.run_sum0 == 0 and sk.run_sum1 == 0
        assert sk.win_sum0 == 0 and sk.win_sum1 == 0


def test_recover_exhaustive_balls_sampled_codewords():
    """Oracle check: recover returns x for every y in its two-deletion ball."""
    plan = resolve(DESK)
    st = plan.stage1
    rng = random.Random(5)
    for _ in range(40):
        x = tuple(rng.randrange(4) for _ in range(st.m))
        sk = sketch(x, st)
        for y in deletion_ball(x, 2):
            assert recover(y, sk, st) == x


def test_recover_both_cases_paths():
    plan = resolve(DESK)
    st = plan.stage1
    # x whose first row has far-apart runs: two-runs path
    x = (1, 1, 0, 0, 3, 3)  # first row 110011
    sk = sketch(x, st)
    y = x[:1] + x[2:5] + x[6:]  # delete columns 2 and 6: one per far run
    assert isinstance(analyze_two_deletions("110011", "1001"), TwoRuns)
    assert recover(y, sk, st) == x
    # both deletions inside one run of the first row: window path
    y2 = x[:2] + x[4:]  # delete columns 3 and 4 (the 00 run)
    assert isinstance(analyze_two_deletions("110011", "1111"), Window)
    assert recover(y2, sk, st) == x


def test_encode_segment_lengths_and_decode_all_tail_deletions():
    plan = resolve(DESK)
    u = (3, 1, 0, 2, 2, 1)[: plan.message_len]
    x = encode(u, plan)
    assert len(x) == plan.m3
    assert decode(x[: plan.m3 - 2], plan) == u  # both deletions at the end
    # both deletions inside the repetition tail
    y = x[: plan.m2 + 1] + x[plan.m2 + 3 :]
    assert decode(y, plan) == u


def test_decode_rejects_wrong_length():
    plan = resolve(DESK)
    u = (0,) * plan.message_len
    x = encode(u, plan)
    with pytest.raises(DecodeFailure):
        decode(x, plan)


def test_encode_decode_random_pairs_verbatim_provider():
    plan = resolve(CodeParams(mode=MODE_TWODEL, n=6, q=4, provider="verbatim"))
    rng = random.Random(11)
    for _ in range(12):
        u = tuple(rng.randrange(4) for _ in range(plan.message_len))
        x = encode(u, plan)
        for _ in range(25):
            drop = set(rng.sample(range(len(x)), 2))
            y = tuple(s for k, s in enumerate(x) if k not in drop)
            assert decode(y, plan) == u


def test_encode_decode_random_pairs_q6():
    plan = resolve(CodeParams(mode=MODE_TWODEL, n=5, q=6, provider="verbatim"))
    rng = random.Random(13)
    for _ in range(8):
        u = tuple(rng.randrange(6) for _ in range(plan.message_len))
        x = encode(u, plan)
        for _ in range(20):
            drop = set(rng.sample(range(len(x)), 2))
            y = tuple(s for k, s in enumerate(x) if k not in drop)
            assert decode(y, plan) == u


def test_all_zero_message_round_trip():
    plan = resolve(DESK)
    u = (0,) * plan.message_len
    x = encode(u, plan)
    y = x[1:-1]
    assert decode(y, plan) == u
