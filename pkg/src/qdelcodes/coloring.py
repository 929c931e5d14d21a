"""Confusability colorings backing the compact two-deletion sketch.

Two length-w strings are confusable when their two-deletion balls intersect.
A greedy coloring of that graph, assigning colors in canonical string order
(lexicographic, i.e. by integer value read most-significant-bit first),
gives every confusable pair distinct colors, so the color alone picks the
right supersequence during decoding.

Tables are deskscale artifacts (w <= W_MAX_DEFAULT): building one walks all
2^w strings, grouping them by their 2-deletion descendants.  Tables persist
in a flat CLRT file and are memoized per process.
"""

from __future__ import annotations

import os
import struct

import numpy as np

W_MAX_DEFAULT = 14

_MAGIC = b"CLRT"
_VERSION = 1

_CACHE: dict[int, "ColorTable"] = {}


class ColorTable:
    def __init__(self, w: int, colors: np.ndarray, count: int):
        self.w = w
        self.colors = colors
        self.count = count
        self._lookup = colors.tolist()  # plain list: fastest scalar indexing
        self._index = None              # lazy descendant -> supersequences map

    @property
    def width(self) -> int:
        """Sketch width in bits: enough to address every color."""
        return (self.count - 1).bit_length()

    def color_of(self, c: str) -> int:
        if len(c) != self.w:
            raise ValueError("table is for length %d, got %d" % (self.w, len(c)))
        idx = int(c, 2) if c else 0
        return self._lookup[idx]

    def color_of_int(self, value: int) -> int:
        return self._lookup[value]

    def candidates_with_color(self, b_int: int, color: int) -> list[int]:
        """Length-w supersequences of the (w-2)-bit string b_int carrying the
        given color; the decode workhorse."""
        if self._index is None:
            desc = _descendant_matrix(self.w)
            flat_desc = desc.reshape(-1)
            flat_sup = np.tile(np.arange(1 << self.w, dtype=np.int64), desc.shape[0])
            keys = (flat_desc << self.w) | flat_sup
            keys = np.unique(keys)
            order_desc = keys >> self.w
            order_sup = keys & ((1 << self.w) - 1)
            offsets = np.searchsorted(order_desc, np.arange((1 << (self.w - 2)) + 1))
            self._index = (offsets, order_sup)
        offsets, sups = self._index
        lo, hi = offsets[b_int], offsets[b_int + 1]
        cand = sups[lo:hi]
        return cand[self.colors[cand] == color].tolist()


def _descendant_matrix(w: int) -> np.ndarray:
    """desc[k, v] = k-th two-deletion descendant of string v (C(w,2) rows)."""
    values = np.arange(1 << w, dtype=np.int64)
    rows = []
    for a in range(w):          # leftmost deleted character (0-based)
        p1 = w - 1 - a          # its bit position (MSB-first reading)
        for b in range(a + 1, w):
            p2 = w - 1 - b
            hi = (values >> (p1 + 1)) << (p1 - 1)
            mid = ((values >> (p2 + 1)) & ((1 << (p1 - 1 - p2)) - 1)) << p2
            lo = values & ((1 << p2) - 1)
            rows.append(hi | mid | lo)
    return np.stack(rows)


def build_table(w: int, w_max: int = W_MAX_DEFAULT) -> ColorTable:
    """Greedy-color the confusability graph on all length-w strings.

    Refuses w beyond the cost guard.  The greedy bound guarantees
    count <= 1 + max degree.
    """
    if w > w_max:
        raise ValueError("table build refused: length %d exceeds guard %d" % (w, w_max))
    size = 1 << w
    colors = np.zeros(size, dtype=np.int64)
    if w < 2:
        return ColorTable(w, colors, 1)
    desc = _descendant_matrix(w)
    used = np.zeros((1 << (w - 2), 64), dtype=bool)
    count = 0
    for v in range(size):
        ds = np.unique(desc[:, v])
        forbidden = used[ds].any(axis=0)
        if forbidden.all():
            used = np.concatenate([used, np.zeros_like(used)], axis=1)
            forbidden = used[ds].any(axis=0)
        col = int(np.argmin(forbidden))
        colors[v] = col
        used[ds, col] = True
        if col + 1 > count:
            count = col + 1
    return ColorTable(w, colors, count)


def save_table(table: ColorTable, path: str) -> None:
    entry_bytes = 1 if table.width <= 8 else (2 if table.width <= 16 else 4)
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<BBIB", _VERSION, table.w, table.count, entry_bytes))
        fh.write(table.colors.astype("<u%d" % entry_bytes).tobytes())


def load_table(path: str) -> ColorTable:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != _MAGIC:
            raise ValueError("not a coloring table file")
        version, w, count, entry_bytes = struct.unpack("<BBIB", fh.read(7))
        if version != _VERSION:
            raise ValueError("unsupported table version %d" % version)
        raw = fh.read()
    colors = np.frombuffer(raw, dtype="<u%d" % entry_bytes).astype(np.int64)
    if len(colors) != 1 << w:
        raise ValueError("truncated coloring table")
    return ColorTable(w, colors, count)


def get_table(w: int, table_dir: str | None = None, w_max: int = W_MAX_DEFAULT) -> ColorTable:
    if w in _CACHE:
        return _CACHE[w]
    table = None
    path = None
    if table_dir:
        path = os.path.join(table_dir, "confusability_w%d.clrt" % w)
        if os.path.exists(path):
            table = load_table(path)
    if table is None:
        table = build_table(w, w_max)
        if path:
            os.makedirs(table_dir, exist_ok=True)
            save_table(table, path)
    _CACHE[w] = table
    return table
