"""
Exact integer arithmetic for Hilbert polynomial evaluation.

Python integers are unbounded, so every dimension count in fatflats is a
plain ``int``. This module only adds the binomial coefficient taken as a
polynomial in its upper argument.
"""
from __future__ import division, absolute_import

from math import comb

from fatflats.common import checked_int

__all__ = ['polybinom', 'binom']


def polybinom(x, m):
    """
    x*(x-1)*...*(x-m+1) / m!  for any integer x and m >= 0.

    Agrees with C(x, m) for x >= m >= 0, vanishes for 0 <= x < m and is
    the polynomial continuation for negative x, e.g. polybinom(-3, 2) == 6.
    """
    checked_int('m', m, lo=0)
    if 0 <= x:
        if x < m:
            return 0
        return comb(x, m)
    # running product stays an integer: after step j it equals C(x, j)
    val = 1
    for j in range(1, m + 1):
        val = val * (x - j + 1) // j
    return val


def binom(s, i):
    """Ordinary binomial coefficient, zero outside 0 <= i <= s.
    """
    if i < 0 or s < 0 or i > s:
        return 0
    return comb(s, i)
