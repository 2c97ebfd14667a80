"""
Virtual dimension of linear systems of hypersurfaces in P^n vanishing
along general codimension 2 linear subspaces ("flats") with multiplicities.

Two engines are provided:

  s_formula      closed inclusion-exclusion form for multiplicity 1,
  vdim_recursive residual/trace recursion for arbitrary multiplicities.

All values are polynomials in the degree t and are evaluated at any
integer t, including negative ones reached inside the recursion.
"""
from __future__ import division, absolute_import

from fatflats.common import FatFlatValueError, checked_int, checked_mults
from fatflats.exactmath import polybinom, binom

__all__ = ['FatFlatScheme', 'cap_index', 's_formula', 'conditions_fat_flat',
           'vdim_recursive', 'hilbert_poly_value', 'expected_dim',
           'vdim_points_p2', 'vdim_lines_p3', 'vdim_profile',
           'cache_info', 'clear_cache']


class FatFlatScheme(object):
    """
    The scheme m_1 P_1 + ... + m_s P_s of s general codimension 2 flats
    in P^n. Only the ambient dimension and the multiset of multiplicities
    matter; they are kept sorted in non-increasing order and zero
    multiplicities are dropped.
    """
    def __init__(self, ambient_dim, multiplicities=()):
        checked_int('ambient_dim', ambient_dim, lo=2)
        mults = checked_mults(multiplicities)
        self.ambient_dim = ambient_dim
        self.multiplicities = tuple(sorted((m for m in mults if m > 0),
                                           reverse=True))

    @classmethod
    def uniform(cls, ambient_dim, count, mult):
        checked_int('count', count, lo=0)
        return cls(ambient_dim, (mult,)*count)

    @property
    def count(self):
        return len(self.multiplicities)

    def key(self):
        return (self.ambient_dim, self.multiplicities)

    def __eq__(self, other):
        if not isinstance(other, FatFlatScheme):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FatFlatScheme(%i, %r)" % (self.ambient_dim, self.multiplicities)


def cap_index(n, s):
    """N(n, s) = min(floor(n/2), s): the largest number of flats whose
    intersection is non-empty.
    """
    checked_int('n', n, lo=2)
    checked_int('s', s, lo=0)
    return min(n // 2, s)


def s_formula(n, s, t):
    """
    Expected number of independent forms of degree t through s general
    codimension 2 flats of multiplicity 1 in P^n:

        sum_{i=0}^{N(n,s)} (-1)^i C(s,i) C(t+n-2i, n-2i)
    """
    checked_int('n', n, lo=2)
    checked_int('s', s, lo=0)
    checked_int('t', t)
    return _s_formula(n, s, t)


def _s_formula(n, s, t):
    # unchecked; also meaningful for n = 0, 1, which the recurrence in s reaches
    total = 0
    for i in range(min(n // 2, s) + 1):
        term = binom(s, i) * polybinom(t + n - 2*i, n - 2*i)
        total += -term if i % 2 else term
    return total


def conditions_fat_flat(n, k, m, t):
    """
    Number of conditions imposed on forms of degree t by vanishing to
    order m along a codimension k linear subspace of P^n:

        sum_{i=0}^{m-1} C(i+k-1, k-1) C(t-i+n-k, n-k)

    This is the Hilbert polynomial of the fat subspace; it equals the
    Hilbert function once t >= m.
    """
    checked_int('n', n, lo=2)
    checked_int('k', k, lo=1, hi=n)
    checked_int('m', m, lo=1)
    return sum(polybinom(i + k - 1, k - 1) * polybinom(t - i + n - k, n - k)
               for i in range(m))


def vdim_points_p2(mults, t):
    """vdim of fat points in the plane: C(t+2,2) - sum C(m_i+1, 2)
    """
    mults = checked_mults(mults)
    return polybinom(t + 2, 2) - sum(binom(m + 1, 2) for m in mults)


def vdim_lines_p3(mults, t):
    """
    vdim of general (pairwise skew) lines in P^3 with the given
    multiplicities: C(t+3,3) - sum m(m+1)(3t+5-2m)/6.
    """
    mults = checked_mults(mults)
    return polybinom(t + 3, 3) - sum(m*(m + 1)*(3*t + 5 - 2*m) // 6
                                     for m in mults)


# ----------------------------------------------------------------------
# memoized recursion

# (n, multiplicities, t) -> vdim
_vdim_memo = {}


def cache_info():
    """Number of memoized (n, multiplicities, t) states.
    """
    return len(_vdim_memo)


def clear_cache():
    _vdim_memo.clear()


def _base_value(n, mults, t):
    if not mults:
        return polybinom(t + n, n)
    if n == 2:
        return polybinom(t + 2, 2) - sum(binom(m + 1, 2) for m in mults)
    return None


def _children(n, mults, t):
    """
    Peel the last (smallest) flat P_s with a hyperplane H containing it:
    the residual lowers its multiplicity by one in degree t-1, the trace
    in H loses P_s as a fixed component of multiplicity m_s.
    """
    b = mults[-1]
    rest = mults[:-1]
    if b > 1:
        residual = rest + (b - 1,)
    else:
        residual = rest
    return (n, residual, t - 1), (n - 1, rest, t - b)


def _vdim(n, mults, t):
    top = (n, mults, t)
    if top in _vdim_memo:
        return _vdim_memo[top]
    # explicit stack: depth grows with the total multiplicity, which
    # exceeds the interpreter's recursion limit for the larger scans
    stack = [top]
    while stack:
        state = stack[-1]
        if state in _vdim_memo:
            stack.pop()
            continue
        val = _base_value(*state)
        if val is not None:
            _vdim_memo[state] = val
            stack.pop()
            continue
        kids = _children(*state)
        pending = [kid for kid in kids if kid not in _vdim_memo]
        if pending:
            stack.extend(pending)
            continue
        _vdim_memo[state] = _vdim_memo[kids[0]] + _vdim_memo[kids[1]]
        stack.pop()
    return _vdim_memo[top]


def vdim_recursive(scheme, t):
    """
    Virtual dimension vdim_n(X, t) of the fat flat scheme X in degree t.

    Base cases: the empty scheme gives C(t+n, n) and fat points in P^2
    give C(t+2, 2) - sum C(m_i+1, 2). Otherwise

        vdim_n(X, t) = vdim_n(Res_H X, t-1) + vdim_{n-1}(Tr_H X - m_s P_s, t-m_s)

    where H contains the flat of smallest multiplicity m_s.
    """
    if not isinstance(scheme, FatFlatScheme):
        raise TypeError("scheme must be a FatFlatScheme")
    checked_int('t', t)
    return _vdim(scheme.ambient_dim, scheme.multiplicities, t)


def hilbert_poly_value(scheme, t):
    """HP_X(t) = C(t+n, n) - vdim_n(X, t)
    """
    return polybinom(t + scheme.ambient_dim, scheme.ambient_dim) - \
           vdim_recursive(scheme, t)


def expected_dim(scheme, t):
    return max(vdim_recursive(scheme, t), 0)


def vdim_profile(scheme, t_min, t_max):
    """
    List of (t, vdim) pairs for t_min <= t <= t_max.
    """
    checked_int('t_min', t_min)
    checked_int('t_max', t_max)
    if t_min > t_max:
        raise FatFlatValueError("t_min must not exceed t_max (%i > %i)"
                                % (t_min, t_max))
    return [(t, vdim_recursive(scheme, t)) for t in range(t_min, t_max + 1)]
