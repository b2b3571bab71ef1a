# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: aperiodic correlation and the Golay kernel search.

Every function here has a numpy twin in ``_fallback`` with an identical
signature and identical results; ``_backend`` picks one at import.
"""
import numpy as np

from libc.stdint cimport int64_t

NAME = "cython"


def gauss_xcorr(const int64_t[::1] ar, const int64_t[::1] ai,
                const int64_t[::1] br, const int64_t[::1] bi):
    """Full aperiodic cross-correlation of two Gaussian-integer sequences.

    Returns ``(re, im)`` int64 arrays of length ``2L - 1``; index ``L - 1 + tau``
    holds ``sum_i a[i + tau] * conj(b[i])``.
    """
    cdef Py_ssize_t n = ar.shape[0]
    cdef Py_ssize_t tau, i
    cdef int64_t sr, si
    re = np.zeros(2 * n - 1, dtype=np.int64)
    im = np.zeros(2 * n - 1, dtype=np.int64)
    cdef int64_t[::1] ore = re
    cdef int64_t[::1] oim = im
    with nogil:
        for tau in range(n):
            sr = 0
            si = 0
            for i in range(n - tau):
                sr += ar[i + tau] * br[i] + ai[i + tau] * bi[i]
                si += ai[i + tau] * br[i] - ar[i + tau] * bi[i]
            ore[n - 1 + tau] = sr
            oim[n - 1 + tau] = si
        for tau in range(1, n):
            sr = 0
            si = 0
            for i in range(n - tau):
                sr += ar[i] * br[i + tau] + ai[i] * bi[i + tau]
                si += ai[i] * br[i + tau] - ar[i] * bi[i + tau]
            ore[n - 1 - tau] = sr
            oim[n - 1 - tau] = si
    return re, im


def gauss_code_xcorr(const int64_t[:, ::1] ar, const int64_t[:, ::1] ai,
                     const int64_t[:, ::1] br, const int64_t[:, ::1] bi):
    """Row-summed cross-correlation of two M x N Gaussian-integer codes."""
    cdef Py_ssize_t m = ar.shape[0]
    cdef Py_ssize_t n = ar.shape[1]
    cdef Py_ssize_t tau, i, r
    cdef int64_t sr, si
    re = np.zeros(2 * n - 1, dtype=np.int64)
    im = np.zeros(2 * n - 1, dtype=np.int64)
    cdef int64_t[::1] ore = re
    cdef int64_t[::1] oim = im
    with nogil:
        for tau in range(n):
            sr = 0
            si = 0
            for r in range(m):
                for i in range(n - tau):
                    sr += ar[r, i + tau] * br[r, i] + ai[r, i + tau] * bi[r, i]
                    si += ai[r, i + tau] * br[r, i] - ar[r, i + tau] * bi[r, i]
            ore[n - 1 + tau] = sr
            oim[n - 1 + tau] = si
        for tau in range(1, n):
            sr = 0
            si = 0
            for r in range(m):
                for i in range(n - tau):
                    sr += ar[r, i] * br[r, i + tau] + ai[r, i] * bi[r, i + tau]
                    si += ai[r, i] * br[r, i + tau] - ar[r, i] * bi[r, i + tau]
            ore[n - 1 - tau] = sr
            oim[n - 1 - tau] = si
    return re, im


def complex_xcorr(a, b):
    """Floating full cross-correlation, same layout as ``gauss_xcorr``.

    Delegates to ``np.correlate``: its SIMD dot product beats a scalar loop
    here by 2-4x, since strict IEEE summation order blocks vectorization.
    """
    return np.correlate(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128), "full")


cdef int _pair_shift_sum(int* s, int* t, int n, int tau) noexcept nogil:
    cdef int i
    cdef int acc = 0
    for i in range(n - tau):
        acc += s[i + tau] * s[i] + t[i + tau] * t[i]
    return acc


cdef int _search(int* s, int* t, int n, int k) noexcept nogil:
    cdef int j = n - 1 - k
    cdef int tau, i, acc, a, b, c, d
    cdef int signs[2]
    signs[0] = 1
    signs[1] = -1
    if k > j:
        for tau in range(1, n):
            if _pair_shift_sum(s, t, n, tau) != 0:
                return 0
        return 1
    for a in range(2):
        if k == 0 and a == 1:
            break
        for b in range(2):
            if k == 0 and b == 1:
                break
            for c in range(2):
                if k == j and c == 1:
                    break
                for d in range(2):
                    if k == j and d == 1:
                        break
                    s[k] = signs[a]
                    t[k] = signs[b]
                    if k != j:
                        s[j] = signs[c]
                        t[j] = signs[d]
                    # shift n-1-k only involves the k+1 entries fixed at each end
                    acc = 0
                    tau = n - 1 - k
                    for i in range(k + 1):
                        if i + tau < n:
                            acc += s[i + tau] * s[i] + t[i + tau] * t[i]
                    if acc == 0 and _search(s, t, n, k + 1):
                        return 1
    return 0


def golay_search(int n):
    """First binary Golay pair of length ``n`` in fixed search order, or None."""
    if n < 1:
        return None
    s = np.zeros(n, dtype=np.intc)
    t = np.zeros(n, dtype=np.intc)
    cdef int[::1] sv = s
    cdef int[::1] tv = t
    cdef int found
    with nogil:
        found = _search(&sv[0], &tv[0], n, 0)
    if not found:
        return None
    return [int(x) for x in s], [int(x) for x in t]
