"""Deletion-channel corruption with reproducible ground truth."""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence


class Corruption(NamedTuple):
    result: Sequence
    positions: tuple[int, ...]   # deleted 1-indexed positions, sorted


def corrupt_deletions(s: Sequence, k: int, seed: int) -> Corruption:
    """Delete k positions chosen by the seeded generator."""
    if not (0 <= k <= len(s)):
        raise ValueError("cannot delete %d of %d symbols" % (k, len(s)))
    rng = random.Random(seed)
    positions = tuple(sorted(rng.sample(range(1, len(s) + 1), k)))
    drop = set(positions)
    if isinstance(s, str):
        result = "".join(ch for i, ch in enumerate(s, 1) if i not in drop)
    else:
        result = tuple(sym for i, sym in enumerate(s, 1) if i not in drop)
    return Corruption(result, positions)


def corrupt_burst(s: Sequence, t: int, seed: int) -> Corruption:
    """Delete one interval of length drawn uniformly from [0, t]."""
    if not (0 <= t <= len(s)):
        raise ValueError("burst bound %d exceeds length %d" % (t, len(s)))
    rng = random.Random(seed)
    tprime = rng.randint(0, t)
    if tprime == 0:
        return Corruption(s, ())
    start = rng.randint(1, len(s) - tprime + 1)
    result = s[: start - 1] + s[start - 1 + tprime :]
    return Corruption(result, tuple(range(start, start + tprime)))
