import os
from pathlib import Path

import pytest

from qdelcodes import burst_qary, twodel
from qdelcodes.channel import corrupt_burst, corrupt_deletions
from qdelcodes.cli import main
from qdelcodes.fileformat import (
    KIND_CODEWORD,
    format_string,
    parse_string,
    read_payload,
    write_payload,
)
from qdelcodes.params import (
    MODE_BURST_BIN,
    MODE_BURST_Q,
    MODE_TWODEL,
    CodeParams,
    resolve,
    validate_errors,
)
from qdelcodes.report import render_full_report
from qdelcodes.verify import roundtrip_exhaustive, roundtrip_random

GOLDEN = Path(__file__).parent / "golden"


def test_corrupt_deterministic_and_shape():
    word = "0110101001011010"
    a = corrupt_deletions(word, 3, seed=9)
    b = corrupt_deletions(word, 3, seed=9)
    assert a == b
    assert len(a.positions) == 3
    assert len(a.result) == len(word) - 3
    c = corrupt_deletions(word, 0, seed=9)
    assert c.result == word and c.positions == ()


def test_corrupt_burst_interval():
    word = tuple(range(4)) * 5
    for seed in range(40):
        result, positions = corrupt_burst(word, 3, seed)
        assert len(positions) <= 3
        if positions:
            assert list(positions) == list(range(positions[0], positions[-1] + 1))
        assert len(result) == len(word) - len(positions)


def test_corrupt_rejects_overlong():
    with pytest.raises(ValueError):
        corrupt_deletions("01", 3, 0)


def test_payload_round_trip(tmp_path):
    params = CodeParams(mode=MODE_BURST_Q, n=14, q=4, t=2, delta=12, lam=2)
    plan = resolve(params)
    u = (1, 0, 3, 2, 1, 1)[: plan.message_len]
    x = burst_qary.encode(u, plan)
    path = tmp_path / "w.qdel"
    write_payload(str(path), params, KIND_CODEWORD, x)
    payload = read_payload(str(path))
    assert payload.params == params
    assert payload.kind == KIND_CODEWORD
    assert payload.symbols == x
    # byte-exact: writing the parsed payload again gives the identical file
    path2 = tmp_path / "w2.qdel"
    write_payload(str(path2), payload.params, payload.kind, payload.symbols)
    assert path.read_bytes() == path2.read_bytes()


def test_payload_binary(tmp_path):
    params = CodeParams(mode=MODE_BURST_BIN, n=22, q=2, t=2, delta=12, lam=2)
    path = tmp_path / "b.qdel"
    write_payload(str(path), params, KIND_CODEWORD, "011010011")
    payload = read_payload(str(path))
    assert "".join(str(s) for s in payload.symbols) == "011010011"


def test_text_formats():
    assert format_string("0110", 2) == "0110"
    assert format_string("01100010", 2, hex_bits=True) == "62"
    assert parse_string("62", 2, hex_bits=True) == "01100010"
    assert format_string((3, 0, 2), 4) == "3 0 2"
    assert parse_string("3 0 2", 4) == (3, 0, 2)
    with pytest.raises(ValueError):
        format_string("011", 2, hex_bits=True)


def test_param_validation_messages():
    assert validate_errors(CodeParams(mode=MODE_TWODEL, n=6, q=3)) == ["even alphabet required"]
    assert validate_errors(CodeParams(mode=MODE_BURST_Q, n=14, q=4, t=2, delta=12,
                                      delta_prime=20)) == ["window too small for locator"]
    assert validate_errors(CodeParams(mode=MODE_TWODEL, n=64, q=4, rho=40)) \
        == ["window stride 40 below the case-interval bound 3*41"]
    assert validate_errors(CodeParams(mode=MODE_TWODEL, n=64, q=4, t=2)) == []


def test_cli_round_trip(capsys, tmp_path):
    cw = tmp_path / "cw.qdel"
    rx = tmp_path / "rx.qdel"
    flags = ["--mode", "burst-q", "--n", "14", "--q", "4", "--t", "2", "--delta", "12"]
    assert main(["encode", *flags, "--text", "1 2 3 0 1 2", "--out", str(cw)]) == 0
    assert main(["corrupt", *flags, "--in", str(cw), "--burst", "2", "--seed", "5",
                 "--out", str(rx)]) == 0
    assert main(["decode", "--in", str(rx)]) == 0
    out = capsys.readouterr().out.strip().splitlines()[-1]
    assert out == "1 2 3 0 1 2"


def test_cli_decode_failure_exit_code(capsys, tmp_path):
    flags = ["--mode", "burst-bin", "--n", "22", "--q", "2", "--t", "2", "--delta", "12"]
    assert main(["encode", *flags, "--text", "0110100101"]) == 0
    cw = capsys.readouterr().out.strip()
    assert main(["decode", *flags, "--text", cw[6:]]) == 1  # burst of 6 > t


def test_cli_usage_error_exit_code(capsys):
    assert main(["encode", "--mode", "twodel", "--n", "6", "--q", "3", "--text", "1 2"]) == 2


def test_verify_random_small():
    plan = resolve(CodeParams(mode=MODE_BURST_BIN, n=22, q=2, t=2, delta=12, lam=2))
    report = roundtrip_random(plan, trials=50, seed=2)
    assert report.ok and report.cases == 50


def test_verify_exhaustive_counts_match_ball():
    from qdelcodes.bits import deletion_ball
    plan = resolve(CodeParams(mode=MODE_TWODEL, n=5, q=4, provider="colored", w_max=16))
    report = roundtrip_exhaustive(plan, message_limit=3)
    # distinct decoded words must equal the deletion-ball size, summed over codewords
    u0 = next(iter([(0,) * plan.message_len]))
    x = twodel.encode(u0, plan)
    assert len(deletion_ball(x, 2)) <= report.cases


def test_report_golden():
    expected = (GOLDEN / "report_n1024_q4_t2.txt").read_text()
    assert render_full_report(1024, 4, 2) == expected


def test_report_q2_burst_matches_binary_section():
    # degenerate alphabet: the q-ary construction reduces to the binary one
    from qdelcodes.report import render_mode_report
    q2 = render_mode_report(CodeParams(mode=MODE_BURST_Q, n=128, q=2, t=2))
    bin_ = render_mode_report(CodeParams(mode=MODE_BURST_BIN, n=128, q=2, t=2))
    def numbers(text):
        return [line.split()[-2] for line in text.splitlines() if "measured" in line]
    assert numbers(q2) == numbers(bin_)
