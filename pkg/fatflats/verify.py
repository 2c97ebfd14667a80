"""
Headless verification suite: golden values, identity grids, Veneroni
consistency, scan tables and oracle spot checks.

Each check is a function decorated with @check(name) that receives the
run settings and returns a list of failure strings (empty on success).
"""
from __future__ import division, absolute_import

import random

from fatflats.bounds import (EXACT_KNOWN, adim_family, adim_upper_mult1,
                             family_conditions_check, report_mult1)
from fatflats.classify import (MISSING_EXPECTED, UNEXPECTED, classify_family,
                               scan)
from fatflats.exactmath import polybinom
from fatflats.hilbert import (FatFlatScheme, _s_formula, conditions_fat_flat,
                              s_formula, vdim_recursive)
from fatflats.oracle import DEFAULT_CONFIG, adim_rank_oracle
from fatflats.veneroni import LinearSystem, family_source, veneroni_pullback

__all__ = ['run_verify', 'check_names', 'GOLDEN_VDIM', 'GOLDEN_LARGE',
           'EXPECTED_SCANS', 'expected_verdict']


_checks = []

def check(name):
    """
    Register a verification function under *name*.
    """
    def decorator(fn):
        fn.check_name = name
        _checks.append(fn)
        return fn
    return decorator


def check_names():
    return [fn.check_name for fn in _checks]


# (n, multiplicities, t, vdim)
GOLDEN_VDIM = [
    (4, (3,)*5, 13, 135),
    (3, (3,)*4, 10, 54),
    (3, (3,)*3, 7, 0),
    (3, (3,)*2, 4, -9),
    (2, (3,)*3, 7, 18),
    (2, (3,)*2, 4, 3),
    (2, (3,), 1, -3),
    (6, (3,)*7, 19, 0),
    (6, (3,)*6, 16, -729),
    (6, (3,)*5, 13, -243),
    (6, (3,)*4, 10, 0),
    (6, (3,)*3, 7, 0),
    (6, (3,)*2, 4, 0),
]

# 22 four-fold flats in P^21
GOLDEN_LARGE = [
    (85, 12094627905536),
    (86, -157230162771968),
    (87, 96757023244288),
    (88, 2366593604971209),
]

# k -> list of (verdict, n_first, n_last) over n = 3..50
EXPECTED_SCANS = {
    3: [(UNEXPECTED, 3, 50)],
    4: [(UNEXPECTED, 3, 20), (MISSING_EXPECTED, 21, 50)],
    5: [(UNEXPECTED, 3, 17), (MISSING_EXPECTED, 18, 41), (UNEXPECTED, 42, 50)],
    6: [(UNEXPECTED, 3, 15), (MISSING_EXPECTED, 16, 36), (UNEXPECTED, 37, 50)],
}

# (n, multiplicities, t, adim)
ORACLE_SPOTS = [
    (4, (1,)*5, 7, 160),
    (4, (1,)*12, 2, 0),
    (3, (1, 1), 2, 4),
    (2, (2, 2), 2, 1),
    (2, (2,), 2, 3),
]


def expected_verdict(k, n):
    for v, lo, hi in EXPECTED_SCANS[k]:
        if lo <= n <= hi:
            return v
    raise KeyError("No expected verdict for k=%i, n=%i" % (k, n))


def _eq(label, got, want):
    if got != want:
        return ["%s: got %s, expected %s" % (label, got, want)]
    return []


@check('golden_closed_form')
def _golden_closed_form(settings):
    fails = []
    for args, want in [((4, 5, 7), 160), ((3, 4, 6), 56), ((2, 11, 2), -5),
                       ((4, 12, 2), 9)]:
        fails += _eq('s_formula%r' % (args,), s_formula(*args), want)
    return fails


@check('golden_recursion')
def _golden_recursion(settings):
    fails = []
    for n, mults, t, want in GOLDEN_VDIM:
        fails += _eq('vdim_%i(%r, %i)' % (n, mults, t),
                     vdim_recursive(FatFlatScheme(n, mults), t), want)
    return fails


@check('golden_large')
def _golden_large(settings):
    scheme = FatFlatScheme.uniform(21, 22, 4)
    fails = []
    for t, want in GOLDEN_LARGE:
        fails += _eq('vdim_21(4^22, %i)' % t, vdim_recursive(scheme, t), want)
    fails += _eq('adim_family(21, 4)', adim_family(21, 4), 1337982976)
    return fails


@check('pascal_identity')
def _pascal(settings):
    fails = []
    for x in range(-20, 61):
        for m in range(1, 31):
            lhs = polybinom(x, m)
            rhs = polybinom(x - 1, m) + polybinom(x - 1, m - 1)
            if lhs != rhs:
                fails.append("polybinom(%i, %i) breaks Pascal" % (x, m))
    return fails


@check('s_formula_recurrence')
def _recurrence(settings):
    top = min(12, settings['grid_max'])
    fails = []
    for n in range(2, top + 1):
        for s in range(1, top + 1):
            for t in range(-5, 31):
                lhs = _s_formula(n, s, t)
                rhs = _s_formula(n, s - 1, t - 1) + _s_formula(n - 1, s - 1, t - 1)
                if lhs != rhs:
                    fails.append("S(%i,%i,%i) recurrence" % (n, s, t))
    return fails


@check('closed_form_equals_recursion')
def _closed_vs_recursive(settings):
    top = min(9, settings['grid_max'])
    fails = []
    for n in range(2, top + 1):
        for s in range(0, top + 1):
            scheme = FatFlatScheme.uniform(n, s, 1)
            for t in range(0, 21):
                fails += _eq('vdim_%i(1^%i, %i)' % (n, s, t),
                             vdim_recursive(scheme, t), s_formula(n, s, t))
    return fails


@check('single_fat_flat_at_degree_one')
def _single_flat(settings):
    fails = []
    for n in range(3, 31):
        for k in range(3, n + 1):
            fails += _eq('vdim_%i(%iP, 1)' % (n, k),
                         vdim_recursive(FatFlatScheme(n, (k,)), 1), 0)
    fails += _eq('c(6,2,3,1)', conditions_fat_flat(6, 2, 3, 1), 7)
    return fails


@check('sandwich_reports')
def _sandwich(settings):
    fails = []
    rep = report_mult1(4, 5, 7)
    fails += _eq('report(4,5,7)',
                 (rep.vdim, rep.adim_upper, rep.lower_certified, rep.adim_exact),
                 (160, 160, True, 160))
    rep = report_mult1(4, 12, 2)
    fails += _eq('report(4,12,2)',
                 (rep.vdim, rep.adim_upper, rep.lower_certified, rep.adim_exact),
                 (9, 0, False, None))
    for n in range(3, 13):
        for k in range(3, 7):
            rep = report_mult1(n, n + 1, n + k)
            if rep.status != EXACT_KNOWN or rep.adim_exact != s_formula(n, n + 1, n + k):
                fails.append("family report (%i, %i) not exact" % (n, k))
            if not family_conditions_check(n, k):
                fails.append("family conditions fail at (%i, %i)" % (n, k))
    fails += _eq('adim_upper(3,4,6)', adim_upper_mult1(3, 4, 6), 56)
    return fails


@check('veneroni')
def _veneroni(settings):
    fails = []
    fails += _eq('pullback(4,7,1^5)', veneroni_pullback(family_source(4, 3)),
                 LinearSystem(4, 13, (3,)*5))
    fails += _eq('pullback(21,25,1^22)', veneroni_pullback(family_source(21, 4)),
                 LinearSystem(21, 85, (4,)*22))
    rng = random.Random(settings.get('seed', 0))
    for _ in range(500):
        n = rng.randint(2, 10)
        sys_ = LinearSystem(n, rng.randint(-5, 20),
                            [rng.randint(-5, 20) for _ in range(n + 1)])
        if veneroni_pullback(veneroni_pullback(sys_)) != sys_:
            fails.append("involution fails on %r" % sys_)
    return fails


@check('scan_tables')
def _scan_tables(settings):
    fails = []
    for k in sorted(EXPECTED_SCANS):
        for rec in scan(k, 3, 50):
            want = expected_verdict(k, rec.n)
            if rec.verdict != want:
                fails.append("k=%i n=%i: %s, expected %s" % (k, rec.n,
                                                            rec.verdict, want))
            if k == 3 and rec.n >= 6 and rec.vdim > 0:
                fails.append("k=3 n=%i: vdim %i > 0" % (rec.n, rec.vdim))
    rec = classify_family(21, 4)
    fails += _eq('classify(21,4)', (rec.adim, rec.vdim),
                 (1337982976, 12094627905536))
    return fails


@check('oracle_spots')
def _oracle_spots(settings):
    fails = []
    base = settings.get('oracle', DEFAULT_CONFIG)
    for n, mults, t, want in ORACLE_SPOTS:
        for seed in range(settings['seeds']):
            got = adim_rank_oracle(n, mults, t, base._replace(seed=seed))
            fails += _eq('oracle(%i, %r, %i) seed %i' % (n, mults, t, seed),
                         got, want)
    return fails


def run_verify(grid_max=12, seeds=5, oracle_config=None, log=None, only=None):
    """
    Run the registered checks (or those named in *only*).
    Returns (number of passed checks, list of failure strings).
    """
    settings = {'grid_max': grid_max, 'seeds': seeds}
    if oracle_config is not None:
        settings['oracle'] = oracle_config
    passed = 0
    failures = []
    for fn in _checks:
        if only is not None and fn.check_name not in only:
            continue
        fails = fn(settings)
        if fails:
            failures.extend("%s: %s" % (fn.check_name, f) for f in fails)
            if log:
                log.check_failed('check', name=fn.check_name,
                                 failures=len(fails), first=fails[0])
        else:
            passed += 1
            if log:
                log.msg('check', name=fn.check_name)
    return passed, failures
