"""
Linear systems dH - m_1 P_1 - ... - m_s P_s and their transforms under
the Veneroni map of P^n, the birational map given by the degree n forms
through n+1 general codimension 2 flats.

The map pulls back H' to nH - P_1 - ... - P_{n+1} and the flat P'_j to
(n-1)H - P_1 - ... - P_{n+1} + P_j. By linearity a system of degree d
with multiplicities m_j (M = sum m_j) pulls back to

    degree  n*d - (n-1)*M
    m'_i =  d - (M - m_i)

The formula is applied formally to any integers; the result carries a
validity flag instead of raising. The map is an involution on systems.
"""
from __future__ import division, absolute_import

from fatflats.common import FatFlatValueError, checked_int, checked_mults
from fatflats.hilbert import FatFlatScheme

__all__ = ['LinearSystem', 'veneroni_pullback', 'family_source',
           'family_target', 'is_cremona_fixed']


class LinearSystem(object):
    """
    The system of degree `degree` forms on P^`ambient_dim` vanishing to
    order multiplicities[i] along flat i. Positions are kept as given.
    """
    def __init__(self, ambient_dim, degree, multiplicities):
        checked_int('ambient_dim', ambient_dim, lo=2)
        checked_int('degree', degree)
        self.ambient_dim = ambient_dim
        self.degree = degree
        self.multiplicities = checked_mults(multiplicities,
                                            allow_negative=True)

    @property
    def valid(self):
        return self.degree >= 0 and all(m >= 0 for m in self.multiplicities)

    @property
    def count(self):
        return len(self.multiplicities)

    def scheme(self):
        """
        The fat flat scheme whose ideal the (valid) system lives in.
        """
        if not self.valid:
            raise FatFlatValueError("Invalid system has no scheme: %r" % self)
        return FatFlatScheme(self.ambient_dim, self.multiplicities)

    def _key(self):
        return (self.ambient_dim, self.degree, self.multiplicities)

    def __eq__(self, other):
        if not isinstance(other, LinearSystem):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        terms = ''.join(' - %iP%i' % (m, i+1)
                        for i, m in enumerate(self.multiplicities))
        flag = '' if self.valid else ' (invalid)'
        return "LinearSystem(P^%i: %iH%s)%s" % (self.ambient_dim, self.degree,
                                                 terms, flag)


def veneroni_pullback(system):
    n = system.ambient_dim
    if system.count != n + 1:
        raise FatFlatValueError("Veneroni transform needs %i flats in P^%i, got %i"
                                % (n + 1, n, system.count))
    d = system.degree
    total = sum(system.multiplicities)
    return LinearSystem(n, n*d - (n - 1)*total,
                        [d - (total - m) for m in system.multiplicities])


def family_source(n, k):
    """(n+k)H - P_1 - ... - P_{n+1}
    """
    checked_int('n', n, lo=2)
    checked_int('k', k)
    return LinearSystem(n, n + k, (1,)*(n + 1))


def family_target(n, k):
    """(kn+1)H - kP_1 - ... - kP_{n+1}, the transform of family_source(n, k)
    """
    checked_int('n', n, lo=2)
    checked_int('k', k)
    return LinearSystem(n, k*n + 1, (k,)*(n + 1))


def is_cremona_fixed(system):
    return veneroni_pullback(system) == system
