import pytest

from qdelcodes.bits import Interval
from qdelcodes.windows import build_windows, covering_window, effective_stride


def test_examples():
    fam = build_windows(16, 4)
    assert [tuple(w) for w in fam.windows] == [(1, 8), (5, 12), (9, 16)]
    # n = 2*stride: a single window covering everything
    fam2 = build_windows(8, 4)
    assert [tuple(w) for w in fam2.windows] == [(1, 8)]
    # ragged tail: the last window keeps length within (stride, 2*stride]
    fam3 = build_windows(17, 4)
    assert [tuple(w) for w in fam3.windows] == [(1, 8), (5, 12), (9, 16), (13, 17)]


def test_build_rejects_bad_stride():
    with pytest.raises(ValueError):
        build_windows(8, 8)
    with pytest.raises(ValueError):
        build_windows(8, 0)


def test_covering_examples():
    fam = build_windows(16, 4)
    # smallest covering index: [6,8] already fits the first window [1,8]
    assert covering_window(fam, Interval(6, 8)) == 1
    assert covering_window(fam, Interval(6, 9)) == 2
    assert covering_window(fam, Interval(1, 1)) == 1
    assert covering_window(fam, Interval(13, 16)) == 3


def test_family_invariants_exhaustive():
    for n in range(3, 65):
        for stride in range(1, min(n - 1, 8) + 1):
            fam = build_windows(n, stride)
            # union covers [1, n]
            covered = set()
            for w in fam.windows:
                covered.update(range(w.lo, w.hi + 1))
            assert covered == set(range(1, n + 1))
            # lengths: 2*stride except possibly the last in (stride, 2*stride]
            for w in fam.windows[:-1]:
                assert w.length == 2 * stride
            assert stride + 1 <= fam.windows[-1].length <= 2 * stride
            # every interval of length <= stride fits in some window
            for length in range(1, stride + 1):
                for lo in range(1, n - length + 2):
                    covering_window(fam, Interval(lo, lo + length - 1))
            # windows two or more indices apart are disjoint
            for j1 in range(len(fam.windows)):
                for j2 in range(j1 + 2, len(fam.windows)):
                    a, b = fam.windows[j1], fam.windows[j2]
                    assert a.hi < b.lo or b.hi < a.lo


def test_effective_stride():
    assert effective_stride(10, 50) == 10
    assert effective_stride(60, 50) == 49
    assert effective_stride(50, 50) == 49
