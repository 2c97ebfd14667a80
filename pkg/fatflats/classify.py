"""
Classification of the Veneroni family (kn+1)H - kP_1 - ... - kP_{n+1}:
compare its actual dimension (known through the transform) with its
virtual dimension, and sweep over n.
"""
from __future__ import division, absolute_import

from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

from fatflats.bounds import adim_family
from fatflats.common import FatFlatValueError, checked_int
from fatflats.hilbert import vdim_recursive
from fatflats.veneroni import family_source, veneroni_pullback

__all__ = ['UNEXPECTED', 'MISSING_EXPECTED', 'EQUAL', 'NO_FORMS', 'VERDICTS',
           'ClassificationRecord', 'verdict', 'classify_family', 'scan',
           'summarize']


UNEXPECTED = 'Unexpected'
MISSING_EXPECTED = 'MissingExpected'
EQUAL = 'Equal'
NO_FORMS = 'NoForms'

VERDICTS = (UNEXPECTED, MISSING_EXPECTED, EQUAL, NO_FORMS)


ClassificationRecord = namedtuple('ClassificationRecord',
                                  ['n', 'k', 'source_degree', 'target_degree',
                                   'adim', 'vdim', 'verdict'])


def verdict(adim, vdim):
    """
    NoForms when adim = 0, otherwise Unexpected (adim > vdim),
    MissingExpected (vdim > adim) or Equal.
    """
    if adim < 0:
        raise FatFlatValueError("adim cannot be negative, got %i" % adim)
    if adim == 0:
        return NO_FORMS
    if adim > vdim:
        return UNEXPECTED
    if vdim > adim:
        return MISSING_EXPECTED
    return EQUAL


def classify_family(n, k):
    checked_int('n', n, lo=3)
    checked_int('k', k, lo=3)
    source = family_source(n, k)
    target = veneroni_pullback(source)
    adim = adim_family(n, k)
    vdim = vdim_recursive(target.scheme(), target.degree)
    return ClassificationRecord(n, k, source.degree, target.degree, adim,
                                vdim, verdict(adim, vdim))


def _classify_row(args):
    return classify_family(*args)


def scan(k, n_min, n_max, jobs=1, log=None):
    """
    One ClassificationRecord per n in [n_min, n_max], ordered by n.
    With jobs > 1 rows are computed in a process pool, each worker with
    its own memo.
    """
    checked_int('k', k, lo=3)
    checked_int('n_min', n_min, lo=3)
    checked_int('n_max', n_max)
    checked_int('jobs', jobs, lo=1)
    if n_max < n_min:
        raise FatFlatValueError("n_max must be >= n_min (%i < %i)"
                                % (n_max, n_min))
    args = [(n, k) for n in range(n_min, n_max + 1)]
    if jobs == 1:
        records = [_classify_row(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_classify_row, args))
    if log:
        for rec in records:
            log.msg('scan_row', n=rec.n, k=rec.k, adim=str(rec.adim),
                    vdim=str(rec.vdim), verdict=rec.verdict)
    return records


def summarize(records):
    """
    Maximal runs of consecutive records sharing a verdict, as a list of
    (verdict, n_first, n_last).
    """
    runs = []
    for rec in records:
        if runs and runs[-1][0] == rec.verdict and runs[-1][2] == rec.n - 1:
            runs[-1] = (rec.verdict, runs[-1][1], rec.n)
        else:
            runs.append((rec.verdict, rec.n, rec.n))
    return runs
