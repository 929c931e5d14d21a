import itertools

import pytest

from qdelcodes.bits import bits_to_int, burst_ball, burst_ball_upto, deletion_ball, supersequences
from qdelcodes.errors import SketchMismatchError
from qdelcodes.sketches import (
    PackedSketch,
    burst_decode,
    burst_sketch,
    burst_sketch_width,
    interleave_rows,
    pack_tuple,
    reassemble_rows,
    twodel_decode,
    twodel_sketch,
    unpack_tuple,
    vt_decode,
    vt_sketch,
    vt_width,
)


def all_bits(n):
    return ("".join(t) for t in itertools.product("01", repeat=n))


def brute_vt_decode(b, sketch, m):
    """Independent oracle: scan every supersequence for a syndrome match."""
    hits = [c for c in supersequences(b, m) if vt_sketch(c) == sketch]
    assert len(hits) == 1
    return hits[0]


def test_vt_examples():
    assert vt_sketch("0000").value == 0
    assert vt_sketch("1010") == PackedSketch(4, 3)  # (1+3) mod 5
    assert vt_sketch("111") == PackedSketch((1 + 2 + 3) % 4, 2)
    # short-string rule: below length 3 the sketch is the string itself
    assert vt_sketch("11") == PackedSketch(3, 2)
    assert vt_sketch("") == PackedSketch(0, 0)


def test_vt_decode_examples():
    assert vt_decode("111", PackedSketch(3, 3), 4) == "1011"
    assert vt_decode("00", PackedSketch(vt_sketch("000").value, 2), 3) == "000"
    assert vt_decode("10", PackedSketch(3, 2), 3) == "110"


def test_vt_widths_are_length_only():
    for m in range(0, 20):
        widths = {vt_sketch(c).width for c in itertools.islice(all_bits(m), 50)}
        assert widths == {vt_width(m)}
        for c in itertools.islice(all_bits(m), 50):
            s = vt_sketch(c)
            assert s.value < (1 << s.width) or s.width == 0 and s.value == 0


def test_vt_round_trip_exhaustive():
    for m in range(1, 15):
        for c in all_bits(m):
            s = vt_sketch(c)
            for b in deletion_ball(c, 1):
                assert vt_decode(b, s, m) == c


def test_vt_decode_matches_bruteforce_oracle():
    for m in range(3, 11):
        for c in all_bits(m):
            s = vt_sketch(c)
            for b in deletion_ball(c, 1):
                assert vt_decode(b, s, m) == brute_vt_decode(b, s, m)


def test_vt_decode_rejects_wrong_length():
    with pytest.raises(SketchMismatchError):
        vt_decode("01", PackedSketch(0, 3), 4)


def test_pack_unpack_round_trip():
    parts = [PackedSketch(5, 3), PackedSketch(0, 0), PackedSketch(9, 5), PackedSketch(1, 1)]
    packed = pack_tuple(parts)
    assert packed.width == 9
    assert unpack_tuple(packed.value, [3, 0, 5, 1]) == [5, 0, 9, 1]
    with pytest.raises(ValueError):
        pack_tuple([PackedSketch(4, 2)])


def test_interleaving():
    assert interleave_rows("110100", 2) == ["100", "110"]
    assert reassemble_rows(["100", "110"]) == "110100"
    for k in range(1, 5):
        for c in all_bits(6):
            assert reassemble_rows(interleave_rows(c, k)) == c


def test_burst_sketch_example():
    # c=110100, t=2: layer 1 is the full VT (7 mod 7 = 0), layer 2 the rows
    # 100 / 110 with syndromes 1 and 3
    s = burst_sketch("110100", 2)
    widths = [vt_width(6), vt_width(3), vt_width(3)]
    parts = unpack_tuple(s.value, widths)
    assert parts == [0, 1, 3]
    assert s.width == burst_sketch_width(6, 2) == sum(widths)


def test_burst_sketch_degenerate():
    assert burst_sketch("0", 1) == PackedSketch(0, 1)
    for c in all_bits(5):
        assert burst_sketch(c, 1) == vt_sketch(c)


def test_burst_round_trip_windowed():
    # dedicated example from the q-ary section: recover the 16-bit string from
    # a 3-burst
    c = "0111011011010010"
    s = burst_sketch(c, 3)
    b = "0111011010010"
    assert b in burst_ball(c, 3)
    assert burst_decode(b, s, len(c), 3) == c


def test_burst_identity():
    s = burst_sketch("0101", 2)
    assert burst_decode("0101", s, 4, 2) == "0101"


def test_burst_round_trip_exhaustive_small():
    for m in range(1, 11):
        for c in all_bits(m):
            for t in range(1, min(4, m) + 1):
                s = burst_sketch(c, t)
                for b in burst_ball_upto(c, t):
                    assert burst_decode(b, s, m, t) == c


def test_twodel_verbatim():
    s = twodel_sketch("0101", "verbatim")
    assert s == PackedSketch(bits_to_int("0101"), 4)
    assert twodel_decode("01", s, 4, "verbatim") == "0101"
    with pytest.raises(SketchMismatchError):
        twodel_decode("11", PackedSketch(bits_to_int("0100"), 4), 4, "verbatim")


def test_twodel_verbatim_round_trip():
    for m in range(2, 9):
        for c in all_bits(m):
            s = twodel_sketch(c, "verbatim")
            for b in deletion_ball(c, 2):
                assert twodel_decode(b, s, m, "verbatim") == c
