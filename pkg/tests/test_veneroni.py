from __future__ import division, absolute_import

import pytest
from hypothesis import given, strategies as st

from fatflats.common import FatFlatValueError
from fatflats.hilbert import FatFlatScheme
from fatflats.veneroni import (LinearSystem, family_source, family_target,
                               is_cremona_fixed, veneroni_pullback)


@st.composite
def systems(draw):
    n = draw(st.integers(2, 12))
    degree = draw(st.integers(-20, 60))
    mults = draw(st.lists(st.integers(-10, 30), min_size=n + 1, max_size=n + 1))
    return LinearSystem(n, degree, mults)


@given(systems())
def test_involution(sys_):
    assert veneroni_pullback(veneroni_pullback(sys_)) == sys_


@given(st.integers(2, 30), st.integers(3, 8))
def test_family_maps_to_fat_family(n, k):
    assert veneroni_pullback(family_source(n, k)) == family_target(n, k)


def test_known_transforms():
    assert veneroni_pullback(LinearSystem(4, 7, (1,)*5)) == \
        LinearSystem(4, 13, (3,)*5)
    assert veneroni_pullback(family_source(21, 4)) == \
        LinearSystem(21, 85, (4,)*22)
    # the map itself: H' pulls back to nH - sum P_i
    assert veneroni_pullback(LinearSystem(3, 1, (0, 0, 0, 0))) == \
        LinearSystem(3, 3, (1, 1, 1, 1))


def test_validity_and_scheme():
    sys_ = veneroni_pullback(LinearSystem(2, 1, (1, 1, 1)))
    assert sys_ == LinearSystem(2, -1, (-1, -1, -1))
    assert not sys_.valid
    assert 'invalid' in repr(sys_)
    with pytest.raises(FatFlatValueError):
        sys_.scheme()
    good = LinearSystem(4, 13, (3, 3, 3, 3, 3))
    assert good.valid
    assert good.scheme() == FatFlatScheme.uniform(4, 5, 3)
    assert repr(LinearSystem(2, 4, (2, 1, 0))) == \
        "LinearSystem(P^2: 4H - 2P1 - 1P2 - 0P3)"


def test_wrong_number_of_flats():
    with pytest.raises(FatFlatValueError):
        veneroni_pullback(LinearSystem(4, 7, (1, 1, 1, 1)))


def test_fixed_systems():
    assert is_cremona_fixed(LinearSystem(3, 4, (1, 1, 1, 1)))
    assert not is_cremona_fixed(family_source(4, 3))
