"""
Brute force actual dimension at desk scale.

adim_n(X, t) = dim [I_X]_t is computed literally over the prime field
F_p: random flats stand in for general ones, vanishing to order m along
a flat is imposed as the vanishing of all partial derivatives of order
< m at sampled points of the flat, and the answer is the number of
degree t monomials minus the rank of the resulting condition matrix.

The characteristic is p, not 0, and the flats are random rather than
general, so the rank can only drop by accident; the probability of
that is at most about (matrix size)^2 / p. Agreement across several
seeds is taken as verification.
"""
from __future__ import division, absolute_import

from collections import namedtuple
from itertools import combinations_with_replacement

import numpy as np
from sympy import isprime

from fatflats.common import FatFlatValueError, checked_int, checked_mults
from fatflats.exactmath import polybinom

__all__ = ['OracleConfig', 'adim_rank_oracle', 'rank_mod_p', 'monomial_exponents']


# products of two residues must fit in int64
MAX_PRIME = 3037000499


class OracleConfig(namedtuple('OracleConfig',
                              ['prime', 'seed', 'samples_per_flat',
                               'max_monomials', 'max_multiplicity'])):
    __slots__ = ()

    @classmethod
    def from_config(cls, config, **overrides):
        """Build from the 'oracle' section of a loaded configuration,
        with keyword overrides that are not None.
        """
        section = dict(config['oracle'])
        section.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**section)


DEFAULT_CONFIG = OracleConfig(prime=2147483647, seed=0, samples_per_flat=2,
                              max_monomials=5000, max_multiplicity=4)


def monomial_exponents(n, t):
    """
    Exponent vectors of the degree t monomials in x_0, ..., x_n as an
    int64 array of shape (C(t+n, n), n+1), in a fixed order.
    """
    rows = []
    for combo in combinations_with_replacement(range(n + 1), t):
        alpha = [0]*(n + 1)
        for i in combo:
            alpha[i] += 1
        rows.append(alpha)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n + 1)


def _derivative_indices(n, m):
    """Multi-indices beta with |beta| < m in n+1 variables
    """
    out = []
    for j in range(m):
        out.extend(monomial_exponents(n, j).tolist())
    return out


def _falling_table(t, m, p):
    # fall[a][b] = a!/(a-b)! mod p, zero when b > a
    fall = np.zeros((t + 1, m), dtype=np.int64)
    for a in range(t + 1):
        val = 1
        for b in range(m):
            if b > a:
                break
            fall[a, b] = val % p
            val *= a - b
    return fall


def _condition_rows(alphas, point, betas, fall, t, p):
    """
    One row per beta: the value at *point* of d^beta applied to every
    monomial x^alpha, i.e. (alpha!/(alpha-beta)!) x^(alpha-beta).
    """
    ncoord = len(point)
    # powers[i, e] = point[i]**e mod p
    powers = np.ones((ncoord, t + 1), dtype=np.int64)
    for e in range(1, t + 1):
        powers[:, e] = (powers[:, e - 1] * point) % p
    rows = np.empty((len(betas), alphas.shape[0]), dtype=np.int64)
    for r, beta in enumerate(betas):
        row = np.ones(alphas.shape[0], dtype=np.int64)
        for i in range(ncoord):
            a = alphas[:, i]
            e = a - beta[i]
            ok = e >= 0
            factor = np.where(ok, fall[a, beta[i]] * powers[i, np.clip(e, 0, t)] % p, 0)
            row = (row * factor) % p
        rows[r] = row
    return rows


def rank_mod_p(matrix, p):
    """
    Rank over F_p by dense Gaussian elimination. Entries are reduced
    mod p first; p must be below MAX_PRIME.
    """
    A = np.array(matrix, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("matrix must be two dimensional")
    nrows, ncols = A.shape
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        below = np.nonzero(A[rank+1:, c])[0] + rank + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[rank]) % p) % p
        rank += 1
    return rank


def adim_rank_oracle(n, multiplicities, t, cfg=DEFAULT_CONFIG, log=None):
    """
    dim of degree t forms on P^n vanishing to order m_i along random
    codimension 2 flats P_i, computed over F_p.
    """
    checked_int('n', n, lo=2, hi=5)
    checked_int('t', t, lo=0, hi=10)
    mults = [m for m in checked_mults(multiplicities) if m > 0]
    for m in mults:
        if m > cfg.max_multiplicity:
            raise FatFlatValueError("multiplicity %i exceeds desk-scale limit %i"
                                    % (m, cfg.max_multiplicity))
    ncols = polybinom(t + n, n)
    if ncols > cfg.max_monomials:
        raise FatFlatValueError("%i monomials exceed desk-scale limit %i"
                                % (ncols, cfg.max_monomials))
    p = cfg.prime
    if not isprime(p) or p >= MAX_PRIME:
        raise FatFlatValueError("prime must be a prime below %i, got %i"
                                % (MAX_PRIME, p))
    checked_int('seed', cfg.seed, lo=0)
    checked_int('samples_per_flat', cfg.samples_per_flat, lo=1)
    if not mults:
        return ncols

    alphas = monomial_exponents(n, t)
    npoints = max(1, cfg.samples_per_flat*polybinom(t + n - 2, n - 2))
    nrows = sum(npoints*len(_derivative_indices(n, m)) for m in mults)
    if p <= max(nrows, ncols):
        raise FatFlatValueError("prime %i does not exceed matrix size %ix%i"
                                % (p, nrows, ncols))
    if log:
        log.msg('oracle_matrix', n=n, mults=list(mults), t=t, rows=nrows,
                cols=ncols, prime=p, seed=cfg.seed)

    fall = _falling_table(t, max(mults), p)
    blocks = []
    for i, m in enumerate(mults):
        # own stream per flat: appending a flat leaves the others unchanged
        rng = np.random.default_rng([cfg.seed, i])
        basis = rng.integers(0, p, size=(n - 1, n + 1), dtype=np.int64)
        lams = rng.integers(0, p, size=(npoints, n - 1), dtype=np.int64)
        betas = _derivative_indices(n, m)
        for lam in lams:
            point = ((lam[:, None] * basis) % p).sum(axis=0) % p
            blocks.append(_condition_rows(alphas, point, betas, fall, t, p))
    rank = rank_mod_p(np.vstack(blocks), p)
    if log:
        log.msg('oracle_rank', rank=rank, adim=ncols - rank)
    return ncols - rank
