"""Overlapping window families used by the sketch constructions.

A family with stride s over [1, n] has windows
``W_j = [(j-1)s+1, (j+1)s]`` for j = 1..ceil(n/s)-2 and a final window
``[(j-1)s+1, n]``.  Consecutive windows overlap in s positions, windows two
or more indices apart are disjoint, and every interval of length <= s lies
inside some window.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import Interval


@dataclass(frozen=True)
class WindowFamily:
    n: int
    stride: int
    windows: tuple[Interval, ...]

    def __len__(self) -> int:
        return len(self.windows)

    def window(self, j: int) -> Interval:
        """Window by 1-based index."""
        return self.windows[j - 1]


def build_windows(n: int, stride: int) -> WindowFamily:
    if not (1 <= stride < n):
        raise ValueError("stride must satisfy 1 <= stride < n")
    count = -(-n // stride) - 1  # ceil(n/stride) - 1
    windows = []
    for j in range(1, count + 1):
        lo = (j - 1) * stride + 1
        hi = (j + 1) * stride if j < count else n
        windows.append(Interval(lo, hi))
    return WindowFamily(n, stride, tuple(windows))


def effective_stride(nominal: int, n: int) -> int:
    """Clamp a nominal stride so the family exists; n <= nominal collapses to
    a single window covering [1, n] (stride n-1)."""
    if n < 2:
        raise ValueError("cannot window a string shorter than 2")
    return nominal if nominal < n else n - 1


def covering_window(fam: WindowFamily, interval: Interval) -> int:
    """Smallest 1-based index j with interval inside W_j."""
    for j, w in enumerate(fam.windows, start=1):
        if w.contains(interval):
            return j
    raise ValueError("no window of stride %d covers %s" % (fam.stride, (interval.lo, interval.hi)))
