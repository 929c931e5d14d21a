"""Component encoders: predicate-enforcing block insertion, the binary-to-q-ary
lift, q-ary chunk representation, and repetition codes.

The regular and dense encoders insert a fixed block (0011, or the density
pattern 0^t 1^t) at schedule positions chosen so that every window of the
critical length contains one full block.  The schedule depends only on the
output length, so the maps are injective and invertible by deleting the
block positions.  This trades redundancy (a few bits per window) for a
deterministic, self-checking construction.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .bits import from_matrix, num_rows, to_matrix, validate_qary
from .errors import DecodeFailure, ParameterError


# ---------------------------------------------------------------------------
# forced-block schedules

def block_schedule(n: int, block_len: int, max_gap: int) -> list[int]:
    """Block start positions: a grid of spacing max_gap clipped to fit.

    Every window whose length forces a gap <= max_gap between starts then
    contains a whole block.  Requires max_gap >= block_len so blocks never
    overlap.
    """
    if max_gap < block_len:
        raise ParameterError(
            "window too small for forced blocks: spacing %d < block %d" % (max_gap, block_len))
    last_start = n - block_len + 1
    return list(range(1, last_start + 1, max_gap))


def _insert_blocks(data: str, n: int, block: str, starts: Sequence[int]) -> str:
    out = []
    starts_set = set()
    for s in starts:
        starts_set.update(range(s, s + len(block)))
    it = iter(data)
    block_pos = {s: block for s in starts}
    i = 1
    while i <= n:
        if i in block_pos:
            out.append(block)
            i += len(block)
        else:
            out.append(next(it))
            i += 1
    return "".join(out)


def _extract_blocks(c: str, block: str, starts: Sequence[int]) -> str:
    forced = set()
    for s in starts:
        if c[s - 1 : s - 1 + len(block)] != block:
            raise DecodeFailure("decode failure: forced block missing at position %d" % s)
        forced.update(range(s, s + len(block)))
    return "".join(ch for i, ch in enumerate(c, 1) if i not in forced)


class BlockEncoder:
    """Injective {0,1}^capacity -> {0,1}^n map whose image satisfies a
    window predicate by construction."""

    def __init__(self, n: int, block: str, window: int):
        self.n = n
        self.block = block
        self.window = window
        if window > n:
            self.starts: list[int] = []  # predicate vacuous, identity embedding
        else:
            # a window [i, i+window-1] holds a full block iff some start lies
            # in [i, i + window - len(block)], an interval of window-len(block)+1
            # grid points; grid spacing window-len(block) always hits it
            self.starts = block_schedule(n, len(block), window - len(block))
        self.capacity = n - len(block) * len(self.starts)
        if self.capacity < 0:
            raise ParameterError("length %d too small for the block schedule" % n)

    def encode(self, data: str) -> str:
        if len(data) != self.capacity:
            raise ValueError("expected %d data bits, got %d" % (self.capacity, len(data)))
        if not self.starts:
            return data
        return _insert_blocks(data, self.n, self.block, self.starts)

    def decode(self, c: str) -> str:
        if len(c) != self.n:
            raise ValueError("expected %d bits, got %d" % (self.n, len(c)))
        if not self.starts:
            return c
        return _extract_blocks(c, self.block, self.starts)


def regular_encoder(n: int, window: int) -> BlockEncoder:
    """Encoder onto regular strings: every length-``window`` substring of the
    output contains 00 and 11 (vacuous when window > n)."""
    return BlockEncoder(n, "0011", window)


def dense_encoder(n: int, pattern: str, window: int) -> BlockEncoder:
    """Encoder onto (pattern, window)-dense strings."""
    if len(pattern) > window:
        raise ParameterError("pattern longer than the density window")
    return BlockEncoder(n, pattern, window)


def run_length_bound(n: int, window: int) -> int:
    """Max run/alternating-substring length any regular output can have.

    A run or alternating substring of length ``window`` would itself be a
    window without 00 or 11, so regular strings keep both below window.
    When the predicate is vacuous the whole string is the bound.
    """
    return window - 1 if window <= n else n


# ---------------------------------------------------------------------------
# binary-to-q-ary lift

def lift_apply(inner: Callable[[str], str], u: Sequence[int], q: int, n_out: int) -> tuple:
    """Extend a one-to-one row encoder to q-ary strings.

    The first matrix row of the output is inner(first row of u); remaining
    rows are copied column-wise with the trailing n_out - |u| columns zero.
    Even q keeps every output symbol below q: flipping the least significant
    bit of an even symbol lands on q-1 at worst.
    """
    if q % 2 != 0:
        raise ParameterError("even alphabet required")
    us = validate_qary(u, q)
    rows_in = to_matrix(us, q) if us else tuple("" for _ in range(num_rows(q)))
    first = inner(rows_in[0])
    if len(first) != n_out:
        raise ValueError("inner encoder produced %d bits, expected %d" % (len(first), n_out))
    pad = "0" * (n_out - len(us))
    rows_out = [first] + [row + pad for row in rows_in[1:]]
    return from_matrix(rows_out, q)


def lift_invert(inner_decode: Callable[[str], str], x: Sequence[int], q: int, n_in: int) -> tuple:
    """Inverse of :func:`lift_apply` given the inner decoder."""
    xs = validate_qary(x, q)
    rows = to_matrix(xs, q)
    first = inner_decode(rows[0])
    if len(first) != n_in:
        raise DecodeFailure("decode failure: inner decoder returned %d bits, expected %d"
                            % (len(first), n_in))
    if any(row[n_in:].strip("0") for row in rows[1:]):
        raise DecodeFailure("decode failure: nonzero padding columns")
    rows_in = [first] + [row[:n_in] for row in rows[1:]]
    return from_matrix(rows_in, q)


# ---------------------------------------------------------------------------
# q-ary representation of bit strings

def qary_chunks(bit_len: int, q: int) -> list[int]:
    """Chunk widths of the q-ary representation of a bit_len-bit string."""
    if q < 2:
        raise ValueError("alphabet size must be >= 2")
    full = max(1, int(math.log2(q)))
    if bit_len == 0:
        return []
    count = -(-bit_len // full)
    widths = [full] * (count - 1)
    widths.append(bit_len - (count - 1) * full)
    return widths


def qary_repr(a: str, q: int) -> tuple:
    """Split a bit string into floor(log2 q)-bit chunks (last one shorter),
    each read MSB-first as one symbol."""
    widths = qary_chunks(len(a), q)
    out = []
    pos = 0
    for w in widths:
        out.append(int(a[pos : pos + w], 2))
        pos += w
    return tuple(out)


def qary_repr_invert(symbols: Sequence[int], bit_len: int, q: int) -> str:
    """Recover the bit string given its original length (carried by the caller)."""
    widths = qary_chunks(bit_len, q)
    if len(widths) != len(symbols):
        raise DecodeFailure("decode failure: expected %d symbols, got %d" % (len(widths), len(symbols)))
    value = 0
    for sym, w in zip(symbols, widths):
        if not (0 <= sym < (1 << w)):
            raise DecodeFailure("decode failure: symbol %d does not fit %d bits" % (sym, w))
        value = (value << w) | sym
    return format(value, "0%db" % bit_len) if bit_len else ""


# ---------------------------------------------------------------------------
# repetition codes

def rep_encode(u: Sequence, t: int):
    """(t+1)-fold repetition: corrects any t deletions."""
    if t < 1:
        raise ValueError("repetition order must be >= 1")
    if isinstance(u, str):
        return "".join(ch * (t + 1) for ch in u)
    return tuple(sym for sym in u for _ in range(t + 1))


def rep_decode(b: Sequence, m: int, t: int):
    """Recover the length-m message from b missing at most t symbols.

    Symbol k is read at position (k-1)(t+1)+1: after at most t deletions
    that position still falls inside symbol k's repeated block, for any
    deletion pattern, burst or not.
    """
    lost = m * (t + 1) - len(b)
    if not (0 <= lost <= t):
        raise ValueError("length %d outside the decodable range for m=%d, t=%d" % (len(b), m, t))
    picks = [b[k * (t + 1)] for k in range(m)]
    if isinstance(b, str):
        return "".join(picks)
    return tuple(picks)
