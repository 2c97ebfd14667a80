from __future__ import division, absolute_import

import pytest

from fatflats import bounds
from fatflats.bounds import (BOUNDED_ONLY, EXACT_KNOWN, adim_family,
                             adim_upper_mult1, family_conditions_check,
                             lower_certificate, report_family, report_mult1)
from fatflats.common import FatFlatValueError
from fatflats.hilbert import s_formula


@pytest.mark.parametrize('n, s, t, expected', [
    (4, 5, 7, 160),
    (4, 12, 2, 0),
    (3, 4, 6, 56),
    (2, 4, 2, 2),
    (5, 0, 2, 21),
    (6, 3, 0, 0),
    (6, 0, 0, 1),
    (6, 3, -2, 0),
])
def test_upper_bound_values(n, s, t, expected):
    assert adim_upper_mult1(n, s, t) == expected


def test_upper_bound_decreases_with_more_flats():
    for n in range(2, 8):
        for s in range(0, 10):
            for t in range(0, 13):
                assert adim_upper_mult1(n, s + 1, t) <= adim_upper_mult1(n, s, t)


def test_upper_bound_dominates_expected_when_certified():
    for n in range(4, 8):
        for s in range(1, 9):
            for t in range(1, 13):
                if lower_certificate(n, s, t):
                    assert adim_upper_mult1(n, s, t) >= max(s_formula(n, s, t), 0)


def test_lower_certificate():
    assert lower_certificate(4, 5, 7)
    assert not lower_certificate(4, 12, 2)
    # nothing to check when at most one flat meets the rest
    assert lower_certificate(3, 9, 1)


def test_reports():
    rep = report_mult1(4, 5, 7)
    assert rep.status == EXACT_KNOWN
    assert (rep.vdim, rep.adim_upper, rep.adim_exact) == (160, 160, 160)
    assert rep.expected == 160

    rep = report_mult1(4, 12, 2)
    assert rep.status == BOUNDED_ONLY
    assert (rep.vdim, rep.adim_upper, rep.lower_certified) == (9, 0, False)
    assert rep.adim_exact is None
    assert rep.expected == 9


def test_family_sandwich_is_tight():
    for n in range(3, 13):
        for k in range(3, 7):
            assert family_conditions_check(n, k)
            rep = report_family(n, k)
            assert rep.status == EXACT_KNOWN
            assert rep.adim_exact == s_formula(n, n + 1, n + k) == adim_family(n, k)


def test_adim_family():
    assert adim_family(4, 3) == 160
    assert adim_family(21, 4) == 1337982976
    with pytest.raises(FatFlatValueError):
        adim_family(2, 3)
    with pytest.raises(FatFlatValueError):
        adim_family(5, 2)


def test_argument_checks():
    with pytest.raises(FatFlatValueError):
        lower_certificate(0, 3, 2)
    with pytest.raises(FatFlatValueError):
        lower_certificate(4, -1, 2)
    with pytest.raises(FatFlatValueError):
        adim_upper_mult1(1, 2, 2)
    with pytest.raises(FatFlatValueError):
        adim_upper_mult1(4, -1, 2)
    with pytest.raises(TypeError):
        bounds.adim_upper_mult1(4, 2, 2.5)
