"""Core string machinery for deletion codes.

Binary strings are plain ``str`` objects over ``'0'``/``'1'``; q-ary strings
are tuples of ints in ``range(q)``.  Positions are 1-indexed in all interval
arithmetic (matching the usual coding-theory conventions); plain Python
slicing is used internally.

Provides the bit-matrix view of q-ary strings (row 1 = least significant
bit), run decomposition, regularity/density predicates, maximal-period
intervals, and deletion/burst ball enumeration.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence, Union

String = Union[str, tuple]


class Interval(NamedTuple):
    """1-indexed closed interval [lo, hi]; hi < lo denotes the empty interval."""

    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1 if self.hi >= self.lo else 0

    def is_empty(self) -> bool:
        return self.hi < self.lo

    def contains(self, other: "Interval") -> bool:
        if other.is_empty():
            return True
        return self.lo <= other.lo and other.hi <= self.hi

    def contains_pos(self, pos: int) -> bool:
        return self.lo <= pos <= self.hi


EMPTY_INTERVAL = Interval(1, 0)


class Run(NamedTuple):
    interval: Interval
    symbol: str


def validate_bits(c: str) -> str:
    if not isinstance(c, str) or any(ch not in "01" for ch in c):
        raise ValueError("binary string must consist of '0'/'1' characters")
    return c


def validate_qary(x: Sequence[int], q: int) -> tuple:
    if q < 2 or q % 2 != 0:
        raise ValueError("alphabet size must be an even integer >= 2")
    xs = tuple(x)
    if xs and (min(xs) < 0 or max(xs) >= q):
        raise ValueError("symbol out of range for alphabet size %d" % q)
    return xs


def bits_to_int(c: str) -> int:
    """Read a binary string as a nonnegative integer, first character most significant."""
    return int(c, 2) if c else 0


def int_to_bits(value: int, width: int) -> str:
    if value < 0 or (width >= 0 and value >> width):
        raise ValueError("value %d does not fit in %d bits" % (value, width))
    return format(value, "0%db" % width) if width else ""


def num_rows(q: int) -> int:
    """Number of rows of the bit-matrix view of a q-ary string."""
    return max(1, (q - 1).bit_length())


_ROW_LUT: dict[int, list[str]] = {}


def _row_luts(q: int) -> list[str]:
    luts = _ROW_LUT.get(q)
    if luts is None:
        luts = ["".join("1" if (s >> i) & 1 else "0" for s in range(q))
                for i in range(num_rows(q))]
        _ROW_LUT[q] = luts
    return luts


def to_matrix(x: Sequence[int], q: int) -> tuple[str, ...]:
    """Bit-matrix view of ``x``: row i (1-indexed) holds bit 2^(i-1) of each symbol.

    Column j read bottom-up (row 1 least significant) is the binary expansion
    of ``x[j]``.
    """
    xs = validate_qary(x, q)
    return tuple("".join(map(lut.__getitem__, xs)) for lut in _row_luts(q))


def from_matrix(rows: Sequence[str], q: int) -> tuple:
    """Inverse of :func:`to_matrix`; rejects columns encoding values >= q."""
    if not rows:
        raise ValueError("matrix must have at least one row")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("matrix rows must have equal length")
    lut: dict[tuple, int] = {}
    out = []
    for col in zip(*rows):
        v = lut.get(col)
        if v is None:
            v = 0
            for i, ch in enumerate(col):
                if ch == "1":
                    v |= 1 << i
            if v >= q:
                raise ValueError("column encodes %d, not a valid symbol below %d" % (v, q))
            lut[col] = v
        out.append(v)
    return tuple(out)


def runs_decompose(c: Sequence) -> list[Run]:
    """Maximal identical-symbol intervals of ``c``, left to right."""
    if len(c) == 0:
        raise ValueError("empty string")
    runs = []
    start = 1
    for i in range(1, len(c)):
        if c[i] != c[i - 1]:
            runs.append(Run(Interval(start, i), c[start - 1]))
            start = i + 1
    runs.append(Run(Interval(start, len(c)), c[start - 1]))
    return runs


def run_index_of_position(runs: list[Run], n: int) -> list[int]:
    """Map 1-indexed position -> 1-indexed run number (index 0 unused)."""
    idx = [0] * (n + 1)
    for k, run in enumerate(runs, start=1):
        for p in range(run.interval.lo, run.interval.hi + 1):
            idx[p] = k
    return idx


def run_boundaries(c: Sequence) -> list[int]:
    """Run end positions prefixed with 0: [0, p_1, ..., p_k] with p_k = |c|."""
    if len(c) == 0:
        raise ValueError("empty string")
    bounds = [0]
    for i in range(1, len(c)):
        if c[i] != c[i - 1]:
            bounds.append(i)
    bounds.append(len(c))
    return bounds


def regularity_window(n: int, d: int = 7) -> int:
    """Window length floor(d*log2(n)) used by the regularity predicate."""
    if n <= 1:
        return n + 1  # no window fits: vacuously regular
    return int(d * math.log2(n))


def is_regular(c: str, window: int) -> bool:
    """True iff every length-``window`` substring of ``c`` contains both 00 and 11.

    Windows longer than the string impose no constraint.
    """
    n = len(c)
    if window > n:
        return True
    for i in range(n - window + 1):
        sub = c[i : i + window]
        if "00" not in sub or "11" not in sub:
            return False
    return True


def is_dense(c: str, pattern: str, window: int) -> bool:
    """True iff every length-``window`` substring of ``c`` contains ``pattern``."""
    n = len(c)
    if window > n:
        return True
    for i in range(n - window + 1):
        if pattern not in c[i : i + window]:
            return False
    return True


def check_property(c: str, kind: str, *, d: int = 7, pattern: str = "0011", window: int | None = None) -> bool:
    """Predicate dispatcher: ``kind`` is ``"regular"`` or ``"dense"``.

    For ``regular`` the window defaults to floor(d*log2(|c|)); for ``dense``
    it must be given explicitly (the density parameter).
    """
    if kind == "regular":
        w = window if window is not None else regularity_window(len(c), d)
        return is_regular(c, w)
    if kind == "dense":
        if window is None:
            raise ValueError("dense check needs an explicit window")
        if len(pattern) > window:
            raise ValueError("pattern longer than window")
        return is_dense(c, pattern, window)
    raise ValueError("unknown property kind %r" % kind)


def burst_pattern(t: int) -> str:
    """The density pattern: t zeros followed by t ones."""
    if t < 1:
        raise ValueError("burst length bound must be >= 1")
    return "0" * t + "1" * t


def max_period_substring(c: Sequence, seed: Interval, period: int) -> Interval:
    """Maximal interval K containing ``seed`` on which c has the given period.

    K = [lo, hi] has period p iff c[i] == c[i+p] for every i with both
    i and i+p inside K.  The seed itself must already satisfy the period.
    """
    n = len(c)
    if not (1 <= seed.lo and seed.hi <= n):
        raise ValueError("seed out of range")
    if not (1 <= period <= seed.length):
        raise ValueError("period must be between 1 and the seed length")
    for i in range(seed.lo, seed.hi - period + 1):
        if c[i - 1] != c[i - 1 + period]:
            raise ValueError("seed not period-%d" % period)
    lo, hi = seed.lo, seed.hi
    while lo > 1 and c[lo - 2] == c[lo - 2 + period]:
        lo -= 1
    while hi < n and c[hi] == c[hi - period]:
        hi += 1
    return Interval(lo, hi)


def delete_positions(s: String, positions: Sequence[int]) -> String:
    """Remove the given 1-indexed positions from ``s``."""
    drop = set(positions)
    if isinstance(s, str):
        return "".join(ch for i, ch in enumerate(s, 1) if i not in drop)
    return tuple(sym for i, sym in enumerate(s, 1) if i not in drop)


def delete_interval(s: String, lo: int, hi: int) -> String:
    """Remove the 1-indexed closed interval [lo, hi] from ``s``."""
    return s[: lo - 1] + s[hi:]


def deletion_ball(s: String, t: int) -> set:
    """All length-(|s|-t) subsequences of ``s``."""
    if not (0 <= t <= len(s)):
        raise ValueError("cannot delete %d symbols from length %d" % (t, len(s)))
    ball = {s}
    for _ in range(t):
        ball = {u[:i] + u[i + 1 :] for u in ball for i in range(len(u))}
    return ball


def burst_ball(s: String, t: int) -> set:
    """Results of deleting one length-t interval from ``s``."""
    if not (0 <= t <= len(s)):
        raise ValueError("burst longer than the string")
    if t == 0:
        return {s}
    return {s[:i] + s[i + t :] for i in range(len(s) - t + 1)}


def burst_ball_upto(s: String, t: int) -> set:
    """Union of exact-burst balls for lengths 0..t."""
    out: set = set()
    for k in range(t + 1):
        out |= burst_ball(s, k)
    return out


def is_subsequence(b: Sequence, c: Sequence) -> bool:
    """True iff b can be obtained from c by deletions."""
    it = iter(c)
    return all(sym in it for sym in b)


def supersequences(s: String, target_len: int, alphabet: Sequence = ("0", "1")) -> set:
    """All distinct supersequences of ``s`` of the given length.

    For binary strings pass the default alphabet; for q-ary pass range(q).
    """
    extra = target_len - len(s)
    if extra < 0:
        raise ValueError("target length shorter than the string")
    if isinstance(s, str):
        singles = alphabet
        out = {s}
        for _ in range(extra):
            out = {u[:i] + a + u[i:] for u in out for i in range(len(u) + 1) for a in singles}
        return out
    out = {tuple(s)}
    for _ in range(extra):
        out = {u[:i] + (a,) + u[i:] for u in out for i in range(len(u) + 1) for a in alphabet}
    return out


def common_prefix_len(a: Sequence, b: Sequence) -> int:
    """Length of the longest common prefix, via doubling + C-speed slice compares."""
    limit = min(len(a), len(b))
    if limit == 0 or a[0] != b[0]:
        return 0
    lo, hi = 1, limit  # invariant: prefix of length lo matches
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def common_suffix_len(a: Sequence, b: Sequence) -> int:
    limit = min(len(a), len(b))
    if limit == 0 or a[-1] != b[-1]:
        return 0
    lo, hi = 1, limit
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if a[len(a) - mid :] == b[len(b) - mid :]:
            lo = mid
        else:
            hi = mid - 1
    return lo
