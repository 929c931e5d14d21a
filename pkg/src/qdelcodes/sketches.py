"""Per-window sketch primitives.

Three families, all packed into fixed-width nonnegative integers so that
modular sums of sketches stay decodable:

* VT syndrome — recovers a string from any single deletion.
* burst sketch — interleaved VT syndromes, one layer per burst length,
  recovers a string from one deleted interval of length <= t.
* two-deletion sketch — pluggable provider (``verbatim`` or ``colored``)
  that recovers a string from any two deletions.

Strings shorter than 3 symbols are always sketched verbatim; the VT
construction needs length >= 3 and short segments cost nothing to ship
as-is.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .bits import bits_to_int, deletion_ball, int_to_bits, is_subsequence
from .errors import ProviderContractError, SketchMismatchError
from . import coloring

VERBATIM = "verbatim"
COLORED = "colored"
PROVIDERS = (VERBATIM, COLORED)

SHORT_LIMIT = 3  # below this length every sketch is the string itself


class PackedSketch(NamedTuple):
    value: int
    width: int


def pack_tuple(parts: Sequence[PackedSketch]) -> PackedSketch:
    """Concatenate fixed-width sketches, first component most significant."""
    value = 0
    width = 0
    for part in parts:
        if part.width < 0 or part.value >> part.width:
            raise ValueError("sketch value exceeds its declared width")
        value = (value << part.width) | part.value
        width += part.width
    return PackedSketch(value, width)


def unpack_tuple(packed: int, widths: Sequence[int]) -> list[int]:
    """Split an integer back into fixed-width components (inverse of pack_tuple)."""
    out = []
    shift = sum(widths)
    for w in widths:
        shift -= w
        out.append((packed >> shift) & ((1 << w) - 1))
    return out


# ---------------------------------------------------------------------------
# VT syndrome

def vt_width(m: int) -> int:
    """Sketch width for a length-m string (verbatim below the short limit).

    For m >= 3 the syndrome lives in [0, m], so ceil(log2(m+1)) bits.
    """
    if m < SHORT_LIMIT:
        return m
    return m.bit_length()


def vt_sketch(c: str) -> PackedSketch:
    """VT syndrome sum(i*c_i) mod (m+1); strings below length 3 ship verbatim."""
    m = len(c)
    if m < SHORT_LIMIT:
        return PackedSketch(bits_to_int(c), m)
    s = 0
    for i, ch in enumerate(c, 1):
        if ch == "1":
            s += i
    return PackedSketch(s % (m + 1), vt_width(m))


def vt_decode(b: str, sketch: PackedSketch, m: int) -> str:
    """Recover the unique length-m string with the given syndrome from b in its
    single-deletion ball."""
    if len(b) != m - 1:
        raise SketchMismatchError("sketch mismatch: expected length %d, got %d" % (m - 1, len(b)))
    if m < SHORT_LIMIT:
        c = int_to_bits(sketch.value, m)
        if not is_subsequence(b, c):
            raise SketchMismatchError("sketch mismatch")
        return c
    weight = b.count("1")
    s_b = sum(i for i, ch in enumerate(b, 1) if ch == "1")
    delta = (sketch.value - s_b) % (m + 1)
    if delta <= weight:
        # a 0 was deleted with exactly delta ones to its right
        ones_seen = 0
        pos = len(b)  # insertion index in b (0-based), scanning from the right
        while ones_seen < delta:
            pos -= 1
            if pos < 0:
                raise SketchMismatchError("sketch mismatch")
            if b[pos] == "1":
                ones_seen += 1
        return b[:pos] + "0" + b[pos:]
    # a 1 was deleted with exactly delta - weight - 1 zeros to its left
    zeros_needed = delta - weight - 1
    if zeros_needed > (m - 1) - weight:
        raise SketchMismatchError("sketch mismatch")
    zeros_seen = 0
    pos = 0
    while zeros_seen < zeros_needed:
        if b[pos] == "0":
            zeros_seen += 1
        pos += 1
    return b[:pos] + "1" + b[pos:]


# ---------------------------------------------------------------------------
# Burst sketch: column-interleaved VT syndromes, one layer per exact burst length

def interleave_rows(c: str, k: int) -> list[str]:
    """Split into k rows; row j (1-indexed) takes positions j, j+k, j+2k, ..."""
    return [c[j::k] for j in range(k)]


def reassemble_rows(rows: Sequence[str]) -> str:
    k = len(rows)
    n = sum(len(r) for r in rows)
    out = []
    for p in range(n):
        out.append(rows[p % k][p // k])
    return "".join(out)


def interleaved_row_length(m: int, k: int, j: int) -> int:
    """Length of row j (1-indexed) when a length-m string is split into k rows."""
    if j > m:
        return 0
    return (m - j) // k + 1


def burst_layer_widths(m: int, k: int) -> list[int]:
    return [vt_width(interleaved_row_length(m, k, j)) for j in range(1, k + 1)]


def burst_sketch_width(m: int, t: int) -> int:
    return sum(sum(burst_layer_widths(m, k)) for k in range(1, t + 1))


def burst_sketch(c: str, t: int) -> PackedSketch:
    """Sketch recovering c from any one deleted interval of length <= t.

    Layer k holds the VT syndromes of the k interleaved rows; a burst of
    exactly k deletions removes one symbol from each row of layer k.
    """
    if t < 1:
        raise ValueError("burst bound must be >= 1")
    parts = []
    for k in range(1, t + 1):
        for row in interleave_rows(c, k):
            parts.append(vt_sketch(row))
    return pack_tuple(parts)


def burst_decode(b: str, sketch: PackedSketch, m: int, t: int) -> str:
    """Recover the sketched length-m string from b missing one interval of
    length <= t."""
    k = m - len(b)
    if not (0 <= k <= t):
        raise SketchMismatchError("sketch mismatch: burst length %d outside [0, %d]" % (k, t))
    if k == 0:
        return b
    # locate layer k inside the packed sketch
    offset = sum(sum(burst_layer_widths(m, kk)) for kk in range(1, k))
    widths = burst_layer_widths(m, k)
    total = burst_sketch_width(m, t)
    layer_bits = (sketch.value >> (total - offset - sum(widths))) & ((1 << sum(widths)) - 1)
    syndromes = unpack_tuple(layer_bits, widths)
    rows_b = interleave_rows(b, k)
    rows_c = []
    for j in range(k):
        target_len = interleaved_row_length(m, k, j + 1)
        rows_c.append(vt_decode(rows_b[j], PackedSketch(syndromes[j], widths[j]), target_len))
    return reassemble_rows(rows_c)


# ---------------------------------------------------------------------------
# Two-deletion sketch providers

def twodel_width(m: int, provider: str, w_max: int = coloring.W_MAX_DEFAULT,
                 table_dir: str | None = None) -> int:
    if provider == VERBATIM or m < SHORT_LIMIT:
        return m
    if provider == COLORED:
        if m > w_max:
            raise ValueError("provider out of range: colored tables stop at length %d" % w_max)
        return coloring.get_table(m, table_dir, w_max).width
    raise ValueError("unknown provider %r" % provider)


def twodel_sketch(c: str, provider: str, w_max: int = coloring.W_MAX_DEFAULT,
                  table_dir: str | None = None) -> PackedSketch:
    """Sketch recovering c from any two deletions.

    ``verbatim`` ships the string itself (always correct, width |c|);
    ``colored`` looks c up in the confusability coloring for |c| and ships
    the color (width ~ 4*log2|c| + O(1), only for |c| <= w_max).
    """
    m = len(c)
    if provider == VERBATIM or m < SHORT_LIMIT:
        return PackedSketch(bits_to_int(c), m)
    if provider == COLORED:
        if m > w_max:
            raise ValueError("provider out of range: colored tables stop at length %d" % w_max)
        table = coloring.get_table(m, table_dir, w_max)
        return PackedSketch(table.color_of(c), table.width)
    raise ValueError("unknown provider %r" % provider)


def _insert_any_bit(values: set[int], width: int) -> set[int]:
    """All ints obtained by inserting one bit anywhere into width-bit values."""
    out = set()
    for v in values:
        for k in range(width + 1):
            hi = (v >> k) << (k + 1)
            lo = v & ((1 << k) - 1)
            out.add(hi | lo)
            out.add(hi | (1 << k) | lo)
    return out


def twodel_decode(b: str, sketch: PackedSketch, m: int, provider: str,
                  w_max: int = coloring.W_MAX_DEFAULT, table_dir: str | None = None) -> str:
    """Recover the sketched length-m string from b in its two-deletion ball."""
    if len(b) != m - 2:
        raise SketchMismatchError("sketch mismatch: expected length %d, got %d" % (m - 2, len(b)))
    if provider == VERBATIM or m < SHORT_LIMIT:
        c = int_to_bits(sketch.value, m)
        if not is_subsequence(b, c):
            raise SketchMismatchError("sketch mismatch")
        return c
    if provider != COLORED:
        raise ValueError("unknown provider %r" % provider)
    table = coloring.get_table(m, table_dir, w_max)
    matches = table.candidates_with_color(bits_to_int(b), sketch.value)
    if not matches:
        raise SketchMismatchError("sketch mismatch")
    if len(matches) > 1:
        raise ProviderContractError("provider contract violated: %d candidates share a color" % len(matches))
    return int_to_bits(matches[0], m)
