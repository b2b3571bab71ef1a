"""Pure-Python / numpy versions of the kernels in ``_core.pyx``.

Same signatures, same output layout, same search order.
"""
import numpy as np

NAME = "numpy"


def _corr(x, y):
    return np.correlate(x, y, mode="full")


def gauss_xcorr(ar, ai, br, bi):
    re = _corr(ar, br) + _corr(ai, bi)
    im = _corr(ai, br) - _corr(ar, bi)
    return re.astype(np.int64, copy=False), im.astype(np.int64, copy=False)


def gauss_code_xcorr(ar, ai, br, bi):
    n = ar.shape[1]
    re = np.zeros(2 * n - 1, dtype=np.int64)
    im = np.zeros(2 * n - 1, dtype=np.int64)
    for r in range(ar.shape[0]):
        rr, ri = gauss_xcorr(ar[r], ai[r], br[r], bi[r])
        re += rr
        im += ri
    return re, im


def complex_xcorr(a, b):
    # np.correlate conjugates its second argument for complex input
    return _corr(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def golay_search(n):
    if n < 1:
        return None
    s = [0] * n
    t = [0] * n

    def full_check():
        for tau in range(1, n):
            acc = 0
            for i in range(n - tau):
                acc += s[i + tau] * s[i] + t[i + tau] * t[i]
            if acc:
                return False
        return True

    def search(k):
        j = n - 1 - k
        if k > j:
            return full_check()
        first = (1,) if k == 0 else (1, -1)
        last = (1,) if k == j else (1, -1)
        tau = n - 1 - k
        for a in first:
            for b in first:
                for c in last:
                    for d in last:
                        s[k] = a
                        t[k] = b
                        if k != j:
                            s[j] = c
                            t[j] = d
                        acc = 0
                        for i in range(k + 1):
                            if i + tau < n:
                                acc += s[i + tau] * s[i] + t[i + tau] * t[i]
                        if acc == 0 and search(k + 1):
                            return True
        return False

    if not search(0):
        return None
    return list(s), list(t)
