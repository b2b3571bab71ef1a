"""Exact arithmetic in Z[w], w = exp(2j*pi/q), for q-PSK correlations.

A correlation between two q-ary phase sequences is ``sum_k c_k w**k`` where
``c_k`` counts the positions whose phase difference is ``k``.  The count
vector is an exact representation; it is zero (or has a given modulus)
iff the corresponding polynomial vanishes modulo the q-th cyclotomic
polynomial.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DimensionError, DomainError
from .sequences import PhaseSequence, common_order


def _polydiv_monic(num, den):
    """Remainder of integer polynomial division by a monic divisor (low-to-high coefficients)."""
    r = list(num)
    d = len(den) - 1
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j in range(d + 1):
                r[i - d + j] -= c * den[j]
    return r[:d] if d else []


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the q-th cyclotomic polynomial."""
    if q < 1:
        raise DomainError("cyclotomic order must be >= 1")
    num = [-1] + [0] * (q - 1) + [1]
    den = [1]
    for d in range(1, q):
        if q % d == 0:
            den = _polymul(den, cyclotomic_polynomial(d))
    # exact division: x^q - 1 = prod_{d | q} Phi_d
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        quot[i - dd] = c
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] -= c * den[j]
    return tuple(quot)


def reduce(counts, q: int) -> list[int]:
    """Canonical form of ``sum_k counts[k] w**k`` (coefficients mod Phi_q)."""
    counts = [int(c) for c in counts]
    if len(counts) != q:
        raise DimensionError(f"expected {q} coefficients, got {len(counts)}")
    return _polydiv_monic(counts, cyclotomic_polynomial(q))


def is_zero(counts, q: int) -> bool:
    return not any(reduce(counts, q))


def abs2(counts, q: int) -> list[int]:
    """Canonical form of ``|x|**2`` for ``x = sum_k counts[k] w**k``."""
    c = np.asarray(counts, dtype=np.int64)
    out = np.zeros(q, dtype=np.int64)
    for k in range(q):
        if c[k]:
            # x * conj(x): term w**(k - l) for every pair (k, l)
            out += c[k] * np.roll(c[::-1], k + 1)
    return reduce(out, q)


def abs2_equals(counts, q: int, value: int) -> bool:
    """Exact test of ``|x|**2 == value`` for an integer ``value``."""
    target = [int(value)] + [0] * (q - 1)
    return reduce(target, q) == abs2(counts, q)


def to_complex(counts, q: int) -> complex:
    k = np.arange(q)
    return complex(np.sum(np.asarray(counts) * np.exp(2j * np.pi * k / q)))


def accs_counts(a: PhaseSequence, a2: PhaseSequence, tau: int):
    """Count vector of the cross-correlation at shift ``tau``, and its order q."""
    if a.length != a2.length:
        raise DimensionError(f"length mismatch: {a.length} vs {a2.length}")
    q = common_order((a.q, a2.q))
    if q == 0:
        raise DomainError("exact cyclotomic correlation needs q > 0")
    pa = a.with_order(q).phases
    pb = a2.with_order(q).phases
    n = a.length
    if abs(tau) >= n:
        return np.zeros(q, dtype=np.int64), q
    if tau >= 0:
        diff = pa[tau:] - pb[: n - tau]
    else:
        diff = pa[: n + tau] - pb[-tau:]
    return np.bincount(diff % q, minlength=q).astype(np.int64), q


def profile_counts(a: PhaseSequence, a2: PhaseSequence | None = None):
    """Count vectors for every shift: array of shape ``(2L - 1, q)`` plus q."""
    if a2 is None:
        a2 = a
    n = a.length
    rows = []
    q = None
    for tau in range(-(n - 1), n):
        c, q = accs_counts(a, a2, tau)
        rows.append(c)
    return np.stack(rows), q
