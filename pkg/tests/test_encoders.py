import itertools

import pytest
from hypothesis import given, strategies as st

from qdelcodes.bits import burst_pattern, deletion_ball, is_dense, is_regular, to_matrix
from qdelcodes.encoders import (
    dense_encoder,
    lift_apply,
    lift_invert,
    qary_repr,
    qary_repr_invert,
    regular_encoder,
    rep_decode,
    rep_encode,
    run_length_bound,
)
from qdelcodes.errors import DecodeFailure, ParameterError


def all_bits(n):
    return ("".join(t) for t in itertools.product("01", repeat=n))


def test_regular_encoder_output_is_regular():
    for n, window in ((20, 10), (26, 12), (33, 10)):
        enc = regular_encoder(n, window)
        for data in itertools.islice(all_bits(enc.capacity), 512):
            out = enc.encode(data)
            assert len(out) == n
            assert is_regular(out, window)
            assert enc.decode(out) == data


def test_regular_encoder_injective_small():
    enc = regular_encoder(18, 10)
    seen = {}
    for data in all_bits(enc.capacity):
        out = enc.encode(data)
        assert out not in seen
        seen[out] = data


def test_regular_vacuous_identity():
    enc = regular_encoder(10, 26)
    assert enc.capacity == 10
    assert enc.encode("0110100101") == "0110100101"


def test_regular_all_zero_blocks_present():
    enc = regular_encoder(24, 10)
    out = enc.encode("0" * enc.capacity)
    for s in enc.starts:
        assert out[s - 1 : s + 3] == "0011"


def test_regular_infeasible_window():
    with pytest.raises(ParameterError):
        regular_encoder(20, 7)


def test_run_length_bound():
    for n, window in ((40, 10), (30, 12)):
        enc = regular_encoder(n, window)
        bound = run_length_bound(n, window)
        for data in itertools.islice(all_bits(enc.capacity), 2048):
            out = enc.encode(data)
            runs = 1
            cur = 1
            best = 1
            for i in range(1, n):
                cur = cur + 1 if out[i] == out[i - 1] else 1
                best = max(best, cur)
            assert best <= bound


def test_dense_encoder_output_is_dense():
    for t, delta, n in ((2, 12, 30), (1, 6, 20), (3, 14, 40)):
        p = burst_pattern(t)
        enc = dense_encoder(n, p, delta)
        for data in itertools.islice(all_bits(enc.capacity), 512):
            out = enc.encode(data)
            assert is_dense(out, p, delta)
            assert enc.decode(out) == data


def test_dense_vacuous():
    enc = dense_encoder(8, "0011", 12)
    assert enc.capacity == 8


def test_dense_decode_detects_missing_block():
    enc = dense_encoder(30, "0011", 12)
    out = enc.encode("0" * enc.capacity)
    broken = "1" + out[1:]
    with pytest.raises(DecodeFailure):
        enc.decode(broken)


def test_lift_examples():
    # inner = append one zero
    inner = lambda row: row + "0"
    assert lift_apply(inner, (3, 2), 4, 3) == (3, 2, 0)
    assert lift_apply(inner, (0, 0), 4, 3) == (0, 0, 0)
    with pytest.raises(ParameterError, match="even alphabet"):
        lift_apply(inner, (1, 2), 3, 3)


def test_lift_first_row_and_injectivity_exhaustive():
    inner = lambda row: row + "0"
    seen = {}
    q = 4
    for length in range(0, 6):
        seen.clear()
        for u in itertools.product(range(q), repeat=length):
            x = lift_apply(inner, u, q, length + 1)
            assert all(0 <= s < q for s in x)
            rows_u = to_matrix(u, q)
            rows_x = to_matrix(x, q)
            assert rows_x[0] == inner(rows_u[0])
            assert x not in seen
            seen[x] = u
            assert lift_invert(lambda r: r[:-1], x, q, length) == u


def test_lift_with_block_encoder_round_trip():
    q = 6
    enc = regular_encoder(14, 26)  # vacuous window keeps it simple
    for u in itertools.islice(itertools.product(range(q), repeat=5), 300):
        x = lift_apply(lambda r: enc.encode(r + "0" * (enc.capacity - len(r))), u, q, 14)
        assert len(x) == 14


def test_qary_repr_examples():
    assert qary_repr("10110", 4) == (2, 3, 0)
    assert qary_repr("", 4) == ()
    assert qary_repr("110", 8) == (6,)
    assert qary_repr_invert((2, 3, 0), 5, 4) == "10110"


@given(st.text(alphabet="01", max_size=64), st.sampled_from([2, 4, 6, 8]))
def test_qary_repr_round_trip(a, q):
    assert qary_repr_invert(qary_repr(a, q), len(a), q) == a


def test_rep_examples():
    assert rep_encode("10", 2) == "111000"
    assert rep_encode("1", 1) == "11"
    assert rep_encode((2,), 3) == (2, 2, 2, 2)
    assert rep_decode("1100", 2, 2) == "10"
    assert rep_decode("1110", 2, 2) == "10"
    assert rep_decode("111000", 2, 2) == "10"


def test_rep_decode_all_deletion_patterns():
    # stronger than the burst contract: any <= t deletions anywhere
    for t in (1, 2, 3):
        for m in (1, 2, 3, 4):
            for u in itertools.product("01", repeat=m):
                word = rep_encode("".join(u), t)
                for k in range(0, t + 1):
                    for drop in itertools.combinations(range(len(word)), k):
                        b = "".join(ch for i, ch in enumerate(word) if i not in drop)
                        assert rep_decode(b, m, t) == "".join(u)


def test_rep_decode_rejects_bad_length():
    with pytest.raises(ValueError):
        rep_decode("1" * 9, 2, 2)
