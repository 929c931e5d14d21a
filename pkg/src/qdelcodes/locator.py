"""Burst localization.

Two independent tools narrow down where a burst of deletions happened
before window-level recovery takes over:

* an occurrence-weight locator sketch for pattern-dense strings: it stores
  the pattern-occurrence count mod 8 plus the sum of end-anchored occurrence
  weights (n - start + 1) modulo a power of two.  The weight of an
  occurrence after the burst is invariant under the shift, while each
  occurrence before the burst loses exactly the burst length, so testing
  every candidate burst position against the sketch keeps only positions
  near the truth.  The returned interval provably contains every valid
  burst interval; its length is bounded by a declared guarantee factor
  times (density window + burst bound), validated exhaustively in tests.

* period-based confinement when the original string is already known:
  all bursts producing the same result live inside the maximal
  constant-period interval around any one of them.

Occurrences of the pattern 0^t 1^t never overlap (starts differ by >= 2t),
which caps junction effects at two destroyed and one created occurrence.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .bits import Interval, EMPTY_INTERVAL, common_prefix_len, max_period_substring
from .errors import LocatorMismatchError


class LocatorSketch(NamedTuple):
    count_mod: int   # occurrence count mod 8
    shift_sum: int   # sum of (n - start + 1) over occurrences, mod modulus
    modulus: int


COUNT_MOD = 8


def locator_modulus(n: int, t: int) -> int:
    """4*t*n rounded up to a power of two (clean packing, no wraparound in
    the discrepancies the locator must distinguish)."""
    target = max(2, 4 * t * n)
    return 1 << (target - 1).bit_length()


def locator_width(n: int, t: int) -> int:
    return 3 + (locator_modulus(n, t) - 1).bit_length()


def pattern_occurrences(s: str, pattern: str) -> list[int]:
    """1-indexed start positions of (possibly all) pattern occurrences."""
    out = []
    start = 0
    while True:
        i = s.find(pattern, start)
        if i < 0:
            return out
        out.append(i + 1)
        start = i + 1


def locator_sketch(c: str, pattern: str) -> LocatorSketch:
    t = len(pattern) // 2
    n = len(c)
    modulus = locator_modulus(n, t)
    occ = pattern_occurrences(c, pattern)
    total = sum(n - o + 1 for o in occ)
    return LocatorSketch(len(occ) % COUNT_MOD, total % modulus, modulus)


def _admissible_positions(pos: int, t: int, tprime: int, m: int,
                          prev_occ: int | None, next_occ: int | None) -> range:
    """Start positions an unseen occurrence could take around the burst at pos.

    It must overlap the burst-or-junction zone, fit inside the string, and
    keep the >= 2t spacing to the nearest surviving occurrences.
    """
    lo = pos - 2 * t + 1
    hi = pos + tprime - 1
    lo = max(lo, 1)
    hi = min(hi, m - 2 * t + 1)
    if prev_occ is not None:
        lo = max(lo, prev_occ + 2 * t)
    if next_occ is not None:
        hi = min(hi, next_occ - 2 * t)
    return range(lo, hi + 1)


def _hidden_visible_ok(b: str, pos: int, tprime: int, o: int, pattern: str) -> bool:
    """A hidden occurrence at source position o must agree with the bits of b
    still visible around the hypothesized burst [pos, pos+tprime-1]."""
    two_t = len(pattern)
    for cpos in range(o, min(o + two_t - 1, pos - 1) + 1):
        if b[cpos - 1] != pattern[cpos - o]:
            return False
    for cpos in range(max(o, pos + tprime), o + two_t):
        if b[cpos - tprime - 1] != pattern[cpos - o]:
            return False
    return True


def _implied_gaps_ok(prev_occ: int | None, hidden: tuple[int, ...],
                     next_occ: int | None, m: int, delta: int, two_t: int) -> bool:
    """Density check on the junction neighborhood of the implied occurrence
    set: consecutive starts can be at most delta - 2t + 1 apart wherever a
    full density window fits, and the set must reach both string ends."""
    if delta > m:
        return True
    limit = delta - two_t + 1
    pts = ([] if prev_occ is None else [prev_occ]) + list(hidden) \
        + ([] if next_occ is None else [next_occ])
    if not pts:
        return False
    if prev_occ is None and pts[0] > limit:
        return False
    if next_occ is None and pts[-1] < m - delta + 1:
        return False
    for a, nxt in zip(pts, pts[1:]):
        if nxt - a > limit and a + delta <= m:
            return False
    return True


def locate_burst(b: str, sketch: LocatorSketch, m: int, pattern: str,
                 delta: int, t: int) -> Interval:
    """Interval guaranteed to contain every burst interval consistent with b.

    Tests every candidate burst start: occurrences of b clear of the
    junction pin down the sketch prediction up to at most two occurrences
    hidden by the burst.  A hidden occurrence must match the visible bits
    around the junction, keep pattern spacing, and leave the implied
    occurrence set dense; the count and end-anchored weight sums must then
    agree with the sketch.
    """
    tprime = m - len(b)
    if tprime == 0:
        return EMPTY_INTERVAL
    if tprime < 0 or tprime > m:
        raise ValueError("received string longer than the source")
    two_t = 2 * t
    occ = pattern_occurrences(b, pattern)
    # prefix sums of occurrence weights (m - q + 1) in b order
    weights = [m - q + 1 for q in occ]
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)
    total = prefix[-1]
    mod = sketch.modulus
    lo_hit = None
    hi_hit = None
    for pos in range(1, m - tprime + 2):
        k1 = bisect_right(occ, pos - two_t)     # stable occurrences before the junction
        k2_start = bisect_left(occ, pos)        # first stable occurrence after it
        k2 = len(occ) - k2_start
        hidden = (sketch.count_mod - k1 - k2) % COUNT_MOD
        if hidden > 2:
            continue
        # before-burst occurrences keep weight m-q+1; after-burst ones sit at
        # q + tprime in the source, so their weight drops by tprime
        seen = prefix[k1] + (total - prefix[k2_start]) - tprime * k2
        delta_v = (sketch.shift_sum - seen) % mod
        prev_occ = occ[k1 - 1] if k1 > 0 else None
        next_src = occ[k2_start] + tprime if k2 > 0 else None
        spots = [
            o for o in _admissible_positions(pos, t, tprime, m, prev_occ, next_src)
            if _hidden_visible_ok(b, pos, tprime, o, pattern)
        ]
        ok = False
        if hidden == 0:
            ok = delta_v == 0 and _implied_gaps_ok(prev_occ, (), next_src, m, delta, two_t)
        elif hidden == 1:
            ok = any(
                (m - o + 1) % mod == delta_v
                and _implied_gaps_ok(prev_occ, (o,), next_src, m, delta, two_t)
                for o in spots)
        else:
            for o1 in spots:
                if ok:
                    break
                for o2 in spots:
                    if o2 < o1 + two_t:
                        continue
                    if (2 * m - o1 - o2 + 2) % mod == delta_v and \
                            _implied_gaps_ok(prev_occ, (o1, o2), next_src, m, delta, two_t):
                        ok = True
                        break
        if ok:
            if lo_hit is None:
                lo_hit = pos
            hi_hit = pos + tprime - 1
    if lo_hit is None:
        raise LocatorMismatchError("locator mismatch")
    return Interval(lo_hit, hi_hit)


def period_localize(c: str, b: str) -> Interval:
    """Maximal-period interval containing every burst of c that yields b.

    Finds the leftmost interval whose removal gives b and extends it to the
    maximal interval with period (|c| - |b|).
    """
    tprime = len(c) - len(b)
    if tprime < 1:
        raise ValueError("not a burst of c: lengths differ by %d" % tprime)
    lcp = common_prefix_len(c, b)
    leftmost = None
    for p in range(1, min(lcp + 1, len(c) - tprime + 1) + 1):
        if c[p - 1 + tprime :] == b[p - 1 :]:
            leftmost = p
            break
    if leftmost is None:
        raise ValueError("not a burst of c")
    return max_period_substring(c, Interval(leftmost, leftmost + tprime - 1), tprime)
