"""Unimodular sequences, codes, and aperiodic correlation.

Sequences on a q-PSK alphabet are stored as integer phases mod q.  For
q in {1, 2, 4} every entry is a Gaussian integer, so correlations are
accumulated in int64 and zero tests are exact.  Any other alphabet, and
general complex sequences (q = 0), are correlated in complex128.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import _backend
from .errors import DimensionError, DomainError

EXACT_ORDERS = (1, 2, 4)

#: above this length inexact profiles switch from the direct sum to FFT
FFT_THRESHOLD = 4096

UNIMODULAR_TOL = 1e-12

# quarter-turn index -> Gaussian integer
_QUARTER_RE = np.array([1, 0, -1, 0], dtype=np.int64)
_QUARTER_IM = np.array([0, 1, 0, -1], dtype=np.int64)
_QUARTER_VAL = np.array([1, 1j, -1, -1j], dtype=np.complex128)


def zero_tolerance(m: int, n: int) -> float:
    """Absolute threshold below which a floating correlation counts as zero."""
    return 1e-10 * m * n


def _frozen(arr):
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


class PhaseSequence:
    """A unimodular sequence, stored as q-ary phases (q > 0) or complex values (q = 0).

    Parameters
    ----------
    phases : sequence of int, optional
        Phase indices; entry ``p`` stands for ``exp(2j*pi*p/q)``.
    q : int
        Alphabet order.  ``0`` means general complex and requires ``values``.
    values : sequence of complex, optional
        Entries for ``q = 0``.  Each must have modulus 1 within 1e-12.
    """

    __slots__ = ("q", "_phases", "_values")

    def __init__(self, phases=None, q: int = 2, values=None):
        if q < 0:
            raise DomainError(f"alphabet order must be >= 0, got {q}")
        self.q = int(q)
        if q > 0:
            if phases is None:
                raise DomainError("q > 0 requires phases")
            p = np.asarray(phases, dtype=np.int64).reshape(-1) % q
            if p.size < 1:
                raise DomainError("sequence length must be >= 1")
            self._phases = _frozen(p)
            self._values = None
        else:
            if values is None:
                raise DomainError("q = 0 requires complex values")
            v = np.asarray(values, dtype=np.complex128).reshape(-1)
            if v.size < 1:
                raise DomainError("sequence length must be >= 1")
            if np.any(np.abs(np.abs(v) - 1.0) > UNIMODULAR_TOL):
                raise DomainError("sequence is not unimodular")
            self._phases = None
            self._values = _frozen(v)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_values(cls, values) -> "PhaseSequence":
        """Build from complex entries, detecting the smallest of the alphabets q = 1, 2, 4."""
        v = np.asarray(values, dtype=np.complex128).reshape(-1)
        for q in EXACT_ORDERS:
            idx = np.rint(np.angle(v) * q / (2 * np.pi)).astype(np.int64) % q
            ref = _QUARTER_VAL[idx * (4 // q)]
            if np.array_equal(ref, v):
                return cls(idx, q=q)
        return cls(values=v, q=0)

    @classmethod
    def from_signs(cls, signs) -> "PhaseSequence":
        """Binary sequence from +1/-1 entries or a string of '+' and '-'."""
        if isinstance(signs, str):
            signs = [1 if c == "+" else -1 for c in signs if c in "+-"]
        s = np.asarray(signs, dtype=np.int64).reshape(-1)
        if not np.all(np.abs(s) == 1):
            raise DomainError("binary entries must be +1 or -1")
        return cls((s < 0).astype(np.int64), q=2)

    # -- views --------------------------------------------------------
    @property
    def length(self) -> int:
        return len(self._phases) if self.q else len(self._values)

    def __len__(self):
        return self.length

    @property
    def phases(self):
        return self._phases

    @property
    def exact(self) -> bool:
        return self.q in EXACT_ORDERS

    @property
    def values(self) -> np.ndarray:
        if self.q == 0:
            return self._values
        if self.exact:
            return _QUARTER_VAL[self._phases * (4 // self.q)]
        return np.exp(2j * np.pi * self._phases / self.q)

    def gaussian(self):
        """Integer ``(re, im)`` arrays; only for q in {1, 2, 4}."""
        if not self.exact:
            raise DomainError(f"q={self.q} entries are not Gaussian integers")
        r = self._phases * (4 // self.q)
        return _QUARTER_RE[r], _QUARTER_IM[r]

    def signs(self) -> np.ndarray:
        """+1/-1 integer entries of a real-valued exact sequence."""
        re, im = self.gaussian()
        if np.any(im):
            raise DomainError("sequence is not real-valued")
        return re

    def with_order(self, q: int) -> "PhaseSequence":
        """Re-express on a larger alphabet whose order is a multiple of ``self.q``."""
        if q == self.q:
            return self
        if q == 0:
            return PhaseSequence(values=self.values, q=0)
        if self.q == 0 or q % self.q:
            raise DomainError(f"cannot move q={self.q} sequence onto q={q}")
        return PhaseSequence(self._phases * (q // self.q), q=q)

    # -- elementwise transforms --------------------------------------
    def __neg__(self):
        if self.q == 0:
            return PhaseSequence(values=-self._values, q=0)
        if self.q % 2:
            return self.with_order(2 * self.q).__neg__()
        return PhaseSequence(self._phases + self.q // 2, q=self.q)

    def reversed(self) -> "PhaseSequence":
        if self.q == 0:
            return PhaseSequence(values=self._values[::-1], q=0)
        return PhaseSequence(self._phases[::-1], q=self.q)

    def conj(self) -> "PhaseSequence":
        if self.q == 0:
            return PhaseSequence(values=np.conj(self._values), q=0)
        return PhaseSequence(-self._phases, q=self.q)

    def __mul__(self, other):
        """Entrywise product with another sequence of the same length."""
        if not isinstance(other, PhaseSequence):
            return NotImplemented
        if other.length != self.length:
            raise DimensionError("entrywise product needs equal lengths")
        if self.q and other.q:
            q = math.lcm(self.q, other.q)
            return PhaseSequence(
                self.with_order(q).phases + other.with_order(q).phases, q=q
            )
        return PhaseSequence(values=self.values * other.values, q=0)

    def __eq__(self, other):
        if not isinstance(other, PhaseSequence):
            return NotImplemented
        if self.q != other.q or self.length != other.length:
            return False
        if self.q:
            return bool(np.array_equal(self._phases, other._phases))
        return bool(np.array_equal(self._values, other._values))

    def __hash__(self):
        data = self._phases if self.q else self._values
        return hash((self.q, data.tobytes()))

    def __repr__(self):
        if self.q == 2:
            return f"PhaseSequence('{''.join('+-'[p] for p in self._phases)}')"
        if self.q:
            return f"PhaseSequence({self._phases.tolist()}, q={self.q})"
        return f"PhaseSequence(values={np.round(self._values, 6).tolist()})"


class CorrelationProfile:
    """Correlation values over every shift ``-(L-1) .. L-1``, zero shift in the middle.

    Shifts outside that range are zero by definition and are not stored;
    :meth:`at` returns 0 for them.  When ``exact`` is set the complex128
    entries hold Gaussian integers and compare exactly.
    """

    __slots__ = ("values", "exact")

    def __init__(self, values, exact: bool):
        v = np.asarray(values, dtype=np.complex128).reshape(-1)
        if v.size % 2 == 0:
            raise DimensionError("profile must have an odd number of entries")
        self.values = _frozen(v)
        self.exact = bool(exact)

    @property
    def length(self) -> int:
        return (self.values.size + 1) // 2

    def __len__(self):
        return self.values.size

    @property
    def lags(self) -> np.ndarray:
        n = self.length
        return np.arange(-(n - 1), n)

    def at(self, tau: int) -> complex:
        n = self.length
        if abs(tau) >= n:
            return 0j
        return complex(self.values[n - 1 + tau])

    def zero_mask(self, tol: float | None = None) -> np.ndarray:
        """Boolean mask of entries that count as zero (exactly, or within ``tol``)."""
        if self.exact:
            return self.values == 0
        if tol is None:
            tol = zero_tolerance(1, self.length)
        return np.abs(self.values) <= tol

    def as_integers(self):
        """Integer ``(re, im)`` arrays; only for exact profiles."""
        if not self.exact:
            raise DomainError("profile is not exact")
        return (
            np.rint(self.values.real).astype(np.int64),
            np.rint(self.values.imag).astype(np.int64),
        )

    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0))

    def __add__(self, other):
        if not isinstance(other, CorrelationProfile):
            return NotImplemented
        if other.length != self.length:
            raise DimensionError("profiles of different lengths")
        return CorrelationProfile(self.values + other.values, self.exact and other.exact)

    def __mul__(self, scalar):
        if isinstance(scalar, CorrelationProfile):
            return NotImplemented
        z = complex(scalar)
        exact = self.exact and z.real.is_integer() and z.imag.is_integer()
        return CorrelationProfile(self.values * z, exact)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CorrelationProfile):
            return NotImplemented
        return self.exact == other.exact and bool(np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.exact, self.values.tobytes()))

    def __repr__(self):
        vals = self.values
        if self.exact and self.is_real():
            body = np.rint(vals.real).astype(np.int64).tolist()
        else:
            body = np.round(vals, 9).tolist()
        return f"CorrelationProfile({body}, exact={self.exact})"


class CodeMatrix:
    """An M x N code: M row sequences of common length N and alphabet."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[PhaseSequence]):
        rows = tuple(rows)
        if not rows:
            raise DimensionError("a code needs at least one row")
        n = rows[0].length
        if any(r.length != n for r in rows):
            raise DimensionError("code rows must share one length")
        q = common_order(r.q for r in rows)
        self.rows = tuple(r.with_order(q) for r in rows)

    @classmethod
    def from_phases(cls, phases, q: int) -> "CodeMatrix":
        arr = np.asarray(phases, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionError("phase matrix must be two-dimensional")
        return cls(PhaseSequence(row, q=q) for row in arr)

    @classmethod
    def from_signs(cls, signs) -> "CodeMatrix":
        """Binary code from a +1/-1 matrix or lines of '+'/'-' text."""
        if isinstance(signs, str):
            return cls(PhaseSequence.from_signs(line) for line in signs.strip().splitlines())
        return cls(PhaseSequence.from_signs(row) for row in np.asarray(signs))

    @classmethod
    def from_values(cls, values) -> "CodeMatrix":
        return cls(PhaseSequence.from_values(row) for row in np.asarray(values))

    @property
    def M(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return self.rows[0].length

    @property
    def q(self) -> int:
        return self.rows[0].q

    @property
    def exact(self) -> bool:
        return self.rows[0].exact

    @property
    def phases(self) -> np.ndarray:
        return np.stack([r.phases for r in self.rows])

    @property
    def values(self) -> np.ndarray:
        return np.stack([r.values for r in self.rows])

    def gaussian(self):
        parts = [r.gaussian() for r in self.rows]
        return (
            np.ascontiguousarray(np.stack([p[0] for p in parts])),
            np.ascontiguousarray(np.stack([p[1] for p in parts])),
        )

    def column(self, n: int) -> PhaseSequence:
        if self.q:
            return PhaseSequence(self.phases[:, n], q=self.q)
        return PhaseSequence(values=self.values[:, n], q=0)

    def columns(self) -> list[PhaseSequence]:
        return [self.column(n) for n in range(self.N)]

    def with_order(self, q: int) -> "CodeMatrix":
        return CodeMatrix(r.with_order(q) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CodeMatrix(M={self.M}, N={self.N}, q={self.q})"


SET_KINDS = ("CCC", "MOGCS", "type-II ZCCS", "raw")


class CodeSet:
    """K codes of common shape M x N plus declared parameters.

    ``Z`` is the declared zero-correlation-zone width; ``kind`` is one of
    :data:`SET_KINDS`.  ``meta`` carries free-form provenance such as the
    code ordering used by a construction.
    """

    __slots__ = ("codes", "Z", "kind", "meta")

    def __init__(self, codes: Iterable[CodeMatrix], Z: int | None = None,
                 kind: str = "raw", meta: dict | None = None):
        codes = tuple(codes)
        if not codes:
            raise DimensionError("a code set needs at least one code")
        m, n = codes[0].M, codes[0].N
        if any((c.M, c.N) != (m, n) for c in codes):
            raise DimensionError("all codes in a set must share (M, N)")
        q = common_order(c.q for c in codes)
        self.codes = tuple(c.with_order(q) for c in codes)
        if Z is None:
            Z = n
        if not 1 <= Z <= n:
            raise DomainError(f"declared Z={Z} outside 1..{n}")
        if kind not in SET_KINDS:
            raise DomainError(f"unknown set kind {kind!r}; expected one of {SET_KINDS}")
        self.Z = int(Z)
        self.kind = kind
        self.meta = dict(meta or {})

    @property
    def K(self) -> int:
        return len(self.codes)

    @property
    def M(self) -> int:
        return self.codes[0].M

    @property
    def N(self) -> int:
        return self.codes[0].N

    @property
    def q(self) -> int:
        return self.codes[0].q

    @property
    def exact(self) -> bool:
        return self.codes[0].exact

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.K, self.M, self.Z, self.N)

    def __len__(self):
        return self.K

    def __iter__(self):
        return iter(self.codes)

    def __getitem__(self, i):
        return self.codes[i]

    def __eq__(self, other):
        if not isinstance(other, CodeSet):
            return NotImplemented
        return (self.codes, self.Z, self.kind) == (other.codes, other.Z, other.kind)

    def __repr__(self):
        return f"CodeSet({self.kind}, K={self.K}, M={self.M}, Z={self.Z}, N={self.N}, q={self.q})"


def common_order(orders: Iterable[int]) -> int:
    """lcm of alphabet orders, or 0 if any is general complex."""
    out = 1
    for q in orders:
        if q == 0:
            return 0
        out = math.lcm(out, q)
    return out


def _check_pair(a: PhaseSequence, a2: PhaseSequence):
    if a.length != a2.length:
        raise DimensionError(f"length mismatch: {a.length} vs {a2.length}")


# -- correlation ------------------------------------------------------
def accs(a: PhaseSequence, a2: PhaseSequence, tau: int) -> complex:
    """Aperiodic cross-correlation ``sum_i a[i+tau] * conj(a2[i])`` at one shift.

    Returns 0 for ``|tau| >= L``.  Exact (a Gaussian integer stored as
    complex) when both sequences are on q in {1, 2, 4}.
    """
    _check_pair(a, a2)
    n = a.length
    if abs(tau) >= n:
        return 0j
    if a.exact and a2.exact:
        ar, ai = a.gaussian()
        br, bi = a2.gaussian()
        if tau >= 0:
            xr, xi, yr, yi = ar[tau:], ai[tau:], br[: n - tau], bi[: n - tau]
        else:
            xr, xi, yr, yi = ar[: n + tau], ai[: n + tau], br[-tau:], bi[-tau:]
        re = int(np.dot(xr, yr) + np.dot(xi, yi))
        im = int(np.dot(xi, yr) - np.dot(xr, yi))
        return complex(re, im)
    x, y = a.values, a2.values
    if tau >= 0:
        return complex(np.sum(x[tau:] * np.conj(y[: n - tau])))
    return complex(np.sum(x[: n + tau] * np.conj(y[-tau:])))


def correlation_profile(a: PhaseSequence, a2: PhaseSequence | None = None,
                        method: str = "auto") -> CorrelationProfile:
    """Cross-correlation over all ``2L - 1`` shifts (autocorrelation when ``a2`` is None).

    ``method`` is ``"direct"`` (the defining sum), ``"fft"``, or ``"auto"``.
    Auto uses the direct sum up to :data:`FFT_THRESHOLD` and FFT above it;
    exact alphabets going through FFT are rounded back to integers.
    """
    if a2 is None:
        a2 = a
    _check_pair(a, a2)
    exact = a.exact and a2.exact
    if method == "auto":
        method = "fft" if a.length > FFT_THRESHOLD else "direct"
    if method == "fft":
        prof = fft_correlation_profile(a, a2)
        if exact:
            return _round_exact(prof.values)
        return prof
    if method != "direct":
        raise DomainError(f"unknown correlation method {method!r}")
    if exact:
        ar, ai = a.gaussian()
        br, bi = a2.gaussian()
        re, im = _backend.impl.gauss_xcorr(ar, ai, br, bi)
        return CorrelationProfile(re + 1j * im, exact=True)
    out = _backend.impl.complex_xcorr(
        np.ascontiguousarray(a.values), np.ascontiguousarray(a2.values)
    )
    return CorrelationProfile(out, exact=False)


def _round_exact(values):
    r = np.rint(values.real) + 1j * np.rint(values.imag)
    if np.max(np.abs(values - r), initial=0.0) > 0.25:
        raise ArithmeticError("FFT rounding error too large for exact recovery")
    return CorrelationProfile(r, exact=True)


def fft_correlation_profile(a: PhaseSequence, a2: PhaseSequence | None = None) -> CorrelationProfile:
    """Cross-correlation via zero-padded FFT; always flagged inexact."""
    if a2 is None:
        a2 = a
    _check_pair(a, a2)
    n = a.length
    size = 1 << (2 * n - 1).bit_length()
    fa = np.fft.fft(a.values, size)
    fb = np.fft.fft(a2.values, size)
    circ = np.fft.ifft(fa * np.conj(fb))
    out = np.concatenate([circ[size - (n - 1):], circ[:n]]) if n > 1 else circ[:1]
    return CorrelationProfile(out, exact=False)


def code_accs(c1: CodeMatrix, c2: CodeMatrix | None = None) -> CorrelationProfile:
    """Row-summed cross-correlation of two codes (code autocorrelation if ``c2`` is None)."""
    if c2 is None:
        c2 = c1
    if (c1.M, c1.N) != (c2.M, c2.N):
        raise DimensionError(f"code shapes differ: {(c1.M, c1.N)} vs {(c2.M, c2.N)}")
    if c1.exact and c2.exact and c1.N <= FFT_THRESHOLD:
        ar, ai = c1.gaussian()
        br, bi = c2.gaussian()
        re, im = _backend.impl.gauss_code_xcorr(ar, ai, br, bi)
        return CorrelationProfile(re + 1j * im, exact=True)
    total = correlation_profile(c1.rows[0], c2.rows[0])
    for r1, r2 in zip(c1.rows[1:], c2.rows[1:]):
        total = total + correlation_profile(r1, r2)
    return total


# -- Kronecker products and rotations ---------------------------------
def kron(a: PhaseSequence, b: PhaseSequence) -> PhaseSequence:
    """Kronecker product: block ``i`` of the result is ``a[i] * b``."""
    q = common_order((a.q, b.q))
    if q:
        pa = a.with_order(q).phases
        pb = b.with_order(q).phases
        return PhaseSequence(np.add.outer(pa, pb).ravel(), q=q)
    return PhaseSequence(values=np.kron(a.values, b.values), q=0)


def kron_code(c: CodeMatrix, b: PhaseSequence) -> CodeMatrix:
    """Row-wise Kronecker product: row ``v`` becomes ``c.rows[v] (x) b``."""
    return CodeMatrix(kron(r, b) for r in c.rows)


def _rational_turn(theta: float, max_den: int = 64) -> Fraction | None:
    turn = Fraction(theta / (2 * math.pi)).limit_denominator(max_den)
    if abs(float(turn) * 2 * math.pi - theta) <= 1e-12:
        return turn
    return None


def phase_rotate(a: PhaseSequence, theta: float) -> PhaseSequence:
    """Multiply every entry by ``exp(1j*theta)``.

    Rotations by a rational fraction of a turn (denominator <= 64) stay on a
    phase alphabet, enlarged to the lcm of the orders; anything else
    produces a general complex sequence.
    """
    if not 0 <= theta < 2 * math.pi:
        raise DomainError("theta must lie in [0, 2*pi)")
    turn = _rational_turn(theta)
    if a.q and turn is not None:
        q = math.lcm(a.q, turn.denominator)
        shift = turn.numerator * (q // turn.denominator)
        return PhaseSequence(a.with_order(q).phases + shift, q=q)
    return PhaseSequence(values=a.values * cmath.exp(1j * theta), q=0)


def kron_correlation_profile(ab: CorrelationProfile, bb: CorrelationProfile) -> CorrelationProfile:
    """Correlation of ``a (x) b`` with ``a' (x) b'`` from the factor correlations.

    ``ab`` is the profile of ``(a, a')`` (length N) and ``bb`` that of
    ``(b, b')`` (length P).  Shift ``P*j + k`` with ``0 <= k < P`` receives
    ``ab(j) * bb(k) + ab(j+1) * bb(k-P)``.
    """
    n, p = ab.length, bb.length
    out = np.zeros(2 * n * p - 1, dtype=np.complex128)
    centre = n * p - 1
    for j in range(-n, n):
        for k in range(p):
            tau = p * j + k
            if abs(tau) >= n * p:
                continue
            out[centre + tau] = ab.at(j) * bb.at(k) + ab.at(j + 1) * bb.at(k - p)
    return CorrelationProfile(out, exact=ab.exact and bb.exact)
