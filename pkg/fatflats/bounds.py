"""
Actual dimension bounds for schemes of general codimension 2 flats
with multiplicity 1, and the exact actual dimension of the family
(n+k)H - P_1 - ... - P_{n+1}, k >= 3.
"""
from __future__ import division, absolute_import

from collections import namedtuple

from fatflats.common import FatFlatValueError, checked_int
from fatflats.exactmath import polybinom
from fatflats.hilbert import cap_index, s_formula

__all__ = ['DimensionReport', 'EXACT_KNOWN', 'BOUNDED_ONLY',
           'adim_upper_mult1', 'lower_certificate', 'family_conditions_check',
           'adim_family', 'report_mult1', 'report_family']


EXACT_KNOWN = 'ExactKnown'
BOUNDED_ONLY = 'BoundedOnly'


class DimensionReport(namedtuple('DimensionReport',
                                 ['ambient_dim', 'count', 'degree', 'vdim',
                                  'adim_upper', 'lower_certified',
                                  'adim_exact', 'status'])):
    """
    vdim and what is known about adim for s general flats of
    multiplicity 1 in degree t. adim_exact is None unless the
    lower certificate and the upper bound meet at a positive value.
    """
    __slots__ = ()

    @property
    def expected(self):
        return max(self.vdim, 0)


_upper_memo = {}

def adim_upper_mult1(n, s, t):
    """
    Upper bound for adim_n(P_1 + ... + P_s, t) obtained by repeatedly
    applying the Castelnuovo inequality with a hyperplane through one
    flat, down to the cases where adim is known exactly: no flats, one
    flat, points in P^2, lines in P^3 (Hartshorne-Hirschowitz) and t <= 0.
    """
    checked_int('n', n, lo=2)
    checked_int('s', s, lo=0)
    checked_int('t', t)
    return _upper(n, s, t)


def _upper(n, s, t):
    key = (n, s, t)
    try:
        return _upper_memo[key]
    except KeyError:
        pass
    if t < 0:
        val = 0
    elif t == 0:
        val = 1 if s == 0 else 0
    elif s == 0:
        val = polybinom(t + n, n)
    elif s == 1:
        val = max(s_formula(n, 1, t), 0)
    elif n == 2:
        val = max(polybinom(t + 2, 2) - s, 0)
    elif n == 3:
        val = max(s_formula(3, s, t), 0)
    else:
        # depth is bounded by s, never deep
        val = _upper(n, s - 1, t - 1) + _upper(n - 1, s - 1, t - 1)
    _upper_memo[key] = val
    return val


def lower_certificate(n, s, t):
    """
    True when S_{n-2p, s-p, t} > 0 for p = 1, ..., N(n,s)-1, in which case
    adim_n(X, t) >= vdim_n(X, t) for X = P_1 + ... + P_s.
    """
    checked_int('n', n, lo=2)
    checked_int('s', s, lo=0)
    checked_int('t', t)
    for p in range(1, cap_index(n, s)):
        if s_formula(n - 2*p, s - p, t) <= 0:
            return False
    return True


def family_conditions_check(n, k):
    """
    True when S_{n-2p, n+1-p, n+k} > 0 for p = 0, ..., floor(n/2)-1.
    Always holds for k >= 3.
    """
    checked_int('n', n, lo=2)
    checked_int('k', k)
    for p in range(n // 2):
        if s_formula(n - 2*p, n + 1 - p, n + k) <= 0:
            return False
    return True


def adim_family(n, k):
    """
    adim_n(P_1 + ... + P_{n+1}, n+k) = S_{n,n+1,n+k} > 0 for k >= 3.
    The Veneroni map carries this system to (kn+1)H - kP_1 - ... - kP_{n+1},
    so the value is also the actual dimension of the latter.
    """
    checked_int('n', n, lo=3)
    checked_int('k', k, lo=3)
    val = s_formula(n, n + 1, n + k)
    if val <= 0:
        # never reached for k >= 3
        raise FatFlatValueError("non-positive family dimension at n=%i, k=%i"
                                % (n, k))
    return val


def report_mult1(n, s, t):
    vdim = s_formula(n, s, t)
    upper = adim_upper_mult1(n, s, t)
    certified = lower_certificate(n, s, t)
    if certified and upper == vdim and vdim > 0:
        return DimensionReport(n, s, t, vdim, upper, certified, vdim,
                               EXACT_KNOWN)
    return DimensionReport(n, s, t, vdim, upper, certified, None, BOUNDED_ONLY)


def report_family(n, k):
    checked_int('n', n, lo=2)
    return report_mult1(n, n + 1, n + k)
