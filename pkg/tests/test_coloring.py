import itertools
import math

import pytest

from qdelcodes import coloring
from qdelcodes.bits import deletion_ball
from qdelcodes.errors import ProviderContractError
from qdelcodes.sketches import twodel_decode, twodel_sketch


def all_bits(n):
    return ("".join(t) for t in itertools.product("01", repeat=n))


def confusable_buckets(w):
    """descendant -> strings containing it, derived straight from the balls."""
    buckets = {}
    for c in all_bits(w):
        for d in deletion_ball(c, 2):
            buckets.setdefault(d, []).append(c)
    return buckets


@pytest.mark.parametrize("w", [4, 5, 6, 8])
def test_no_confusable_collision(w):
    table = coloring.get_table(w)
    for members in confusable_buckets(w).values():
        colors = [table.color_of(c) for c in members]
        assert len(set(colors)) == len(colors)


def test_tiny_tables():
    t0 = coloring.build_table(0)
    assert t0.count == 1 and t0.width == 0
    t1 = coloring.build_table(1)
    assert t1.color_of("0") == t1.color_of("1") == 0
    t2 = coloring.build_table(2)
    # every pair of length-2 strings shares the empty descendant
    assert t2.count == 4


def test_color_count_within_greedy_bound():
    for w in (4, 6, 8, 10):
        table = coloring.get_table(w)
        assert table.count <= 16 * w ** 4
        assert table.width <= math.ceil(4 * math.log2(w)) + 4


def test_build_refuses_beyond_guard():
    with pytest.raises(ValueError):
        coloring.build_table(15)


def test_persistence_round_trip(tmp_path):
    table = coloring.build_table(6)
    path = tmp_path / "t.clrt"
    coloring.save_table(table, str(path))
    loaded = coloring.load_table(str(path))
    assert loaded.w == table.w
    assert loaded.count == table.count
    assert list(loaded.colors) == list(table.colors)
    # byte-exact: re-saving produces the identical file
    path2 = tmp_path / "t2.clrt"
    coloring.save_table(loaded, str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_colored_provider_round_trip_small():
    for m in range(2, 9):
        for c in all_bits(m):
            s = twodel_sketch(c, "colored")
            for b in deletion_ball(c, 2):
                assert twodel_decode(b, s, m, "colored") == c


def test_colored_provider_contract_pairwise():
    # the exact two-deletion sketch contract at provider scope
    for w in (6, 9):
        seen = {}
        for c in all_bits(w):
            seen[c] = twodel_sketch(c, "colored").value
        for members in confusable_buckets(w).values():
            for a, b in itertools.combinations(members, 2):
                assert seen[a] != seen[b], (a, b)
