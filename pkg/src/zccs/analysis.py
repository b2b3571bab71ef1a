"""Verification and figures of merit for code sets.

All zero tests are exact for alphabets q in {1, 2, 4}; otherwise a value
counts as zero when its modulus is at most ``1e-10 * M * N``.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .ccc import Violation
from .errors import DomainError, PreconditionError
from .kernels import gcp_supported
from .sequences import (
    CodeSet,
    CorrelationProfile,
    PhaseSequence,
    code_accs,
    correlation_profile,
    zero_tolerance,
)

DEFAULT_OVERSAMPLING = 16

#: length multipliers reachable by the quadriphase type-II ZCP family we compare against
COMPARED_FORMS = (3, 7, 9, 14, 15)


def default_workers() -> int:
    """Worker count from ``ZCCS_WORKERS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("ZCCS_WORKERS", "1")))
    except ValueError:
        return 1


def _pair_profiles(s: CodeSet, workers: int | None):
    """Profiles for every ordered pair ``i <= j``; the rest follow by conjugate symmetry."""
    pairs = [(i, j) for i in range(s.K) for j in range(i, s.K)]
    workers = default_workers() if workers is None else workers

    def one(pair):
        i, j = pair
        return pair, code_accs(s.codes[i], s.codes[j])

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return dict(pool.map(one, pairs))
    return dict(map(one, pairs))


@dataclass
class ZccsVerification:
    """Outcome of :func:`verify_zccs`.

    ``Z_meas`` is the widest zone ``N - Z < |tau| < N`` on which every pair
    (auto and cross) vanishes, measured without looking at the declared Z.
    ``worst`` maps each pair ``(i, j)``, ``i <= j``, to the largest
    magnitude inside the declared zone (and at tau = 0 for cross pairs).
    """

    passed: bool
    classification: str
    Z_declared: int
    Z_meas: int
    exact: bool
    peak_ok: bool
    worst: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def verify_zccs(s: CodeSet, workers: int | None = None, tol: float | None = None) -> ZccsVerification:
    """Check the type-II ZCCS conditions and measure the zone width."""
    n, m = s.N, s.M
    exact = s.exact
    if tol is None:
        tol = zero_tolerance(m, n)
    profiles = _pair_profiles(s, workers)
    centre = n - 1
    peak = n * m
    reach = 0  # largest |tau| != 0 carrying a nonzero value
    peak_ok = True
    worst = {}
    violations = []
    zone = np.abs(np.arange(-(n - 1), n)) > n - s.Z
    for (i, j), prof in profiles.items():
        vals = prof.values
        nz = vals != 0 if exact else np.abs(vals) > tol
        c = vals[centre]
        if i == j:
            ok = c == peak if exact else abs(c - peak) <= tol
        else:
            ok = not nz[centre]
        if not ok:
            peak_ok = False
            violations.append(Violation(i, j, 0, complex(c)))
        off = nz.copy()
        off[centre] = False
        if off.any():
            reach = max(reach, int(np.max(np.abs(prof.lags[off]))))
        in_zone = zone.copy()
        if i != j:
            in_zone[centre] = True
        mags = np.abs(vals[in_zone])
        worst[(i, j)] = float(mags.max(initial=0.0))
        bad = off & zone
        if bad.any():
            k = int(np.flatnonzero(bad)[-1])
            violations.append(Violation(i, j, int(prof.lags[k]), complex(vals[k])))
    z_meas = n - reach
    passed = peak_ok and z_meas >= s.Z
    if not passed:
        kind = "fail"
    elif z_meas == n:
        kind = "CCC" if s.K == m else "MOGCS"
    else:
        kind = "type-II ZCCS"
    return ZccsVerification(passed, kind, s.Z, z_meas, exact, peak_ok, worst, violations)


# -- behaviour outside the zone -----------------------------------------------
@dataclass
class OutOfZoneReport:
    """Per-code comparison of ``corr(Z_mu)(tau)`` with ``M * (N/P) * corr(b)(tau)`` for ``0 < tau < P``."""

    scale: int
    expected: list
    actual: list
    matches: list
    off_zone_magnitudes: list

    @property
    def all_match(self) -> bool:
        return all(self.matches)


def _check_seed_structure(s: CodeSet, b: PhaseSequence):
    p = b.length
    if s.N % p:
        raise DomainError(f"code length {s.N} is not a multiple of seed length {p}")
    bv = b.values
    for k, code in enumerate(s.codes):
        blocks = code.values.reshape(code.M, s.N // p, p)
        ratio = blocks / bv
        if not np.allclose(ratio, ratio[:, :, :1], atol=1e-9):
            raise DomainError(f"code {k} is not a Kronecker product with the given seed")


def out_of_zone_profile(s: CodeSet, b: PhaseSequence) -> OutOfZoneReport:
    """Compare each code's autocorrelation at ``0 < tau <= P-1`` against the seed's, scaled."""
    _check_seed_structure(s, b)
    p = b.length
    scale = s.M * (s.N // p)
    seed_prof = correlation_profile(b)
    tol = zero_tolerance(s.M, s.N)
    expected = [scale * seed_prof.at(t) for t in range(1, p)]
    actual, matches, off = [], [], []
    for code in s.codes:
        prof = code_accs(code)
        got = [prof.at(t) for t in range(1, p)]
        if prof.exact and seed_prof.exact:
            ok = got == expected
        else:
            ok = all(abs(g - e) <= tol for g, e in zip(got, expected))
        actual.append(got)
        matches.append(bool(ok))
        off.append([abs(v) for v in got])
    return OutOfZoneReport(scale, expected, actual, matches, off)


# -- PMEPR ---------------------------------------------------------------------
def _profile_abs_sum(prof: CorrelationProfile):
    v = prof.values
    if prof.exact and np.all((v.real == 0) | (v.imag == 0)):
        return int(np.sum(np.abs(v.real) + np.abs(v.imag)))
    return float(np.sum(np.abs(v)))


def pmepr_bound(a: PhaseSequence):
    """``(1/N) * sum_tau |corr(a)(tau)|``, an upper bound on the PMEPR of ``a``.

    Returned as a :class:`~fractions.Fraction` when every correlation value
    is a real or purely imaginary integer, otherwise as a float.
    """
    total = _profile_abs_sum(correlation_profile(a))
    if isinstance(total, int):
        return Fraction(total, a.length)
    return total / a.length


def pmepr_numeric(a: PhaseSequence, oversampling: int = DEFAULT_OVERSAMPLING) -> float:
    """Peak envelope power over mean power, sampling one symbol at ``N * oversampling`` points."""
    if oversampling < 4:
        raise DomainError(f"oversampling must be >= 4, got {oversampling}")
    n = a.length
    spectrum = np.fft.ifft(a.values, n * oversampling) * (n * oversampling)
    return float(np.max(np.abs(spectrum) ** 2) / n)


@dataclass
class PmeprReport:
    """Correlation-sum bound and sampled PMEPR for every row or column of one code."""

    code: int
    axis: str
    bounds: list
    numeric: list

    @property
    def max_bound(self):
        return max(self.bounds)

    @property
    def max_numeric(self) -> float:
        return max(self.numeric)


def pmepr_report(s: CodeSet, axis: str = "column", oversampling: int = DEFAULT_OVERSAMPLING) -> list[PmeprReport]:
    if axis not in ("row", "column"):
        raise DomainError(f"axis must be 'row' or 'column', got {axis!r}")
    out = []
    for k, code in enumerate(s.codes):
        seqs = code.rows if axis == "row" else code.columns()
        out.append(PmeprReport(
            code=k,
            axis=axis,
            bounds=[pmepr_bound(x) for x in seqs],
            numeric=[pmepr_numeric(x, oversampling) for x in seqs],
        ))
    return out


def column_pmepr_report(s: CodeSet, oversampling: int = DEFAULT_OVERSAMPLING) -> list[PmeprReport]:
    """PMEPR figures for every column (the multicarrier CDMA view)."""
    return pmepr_report(s, "column", oversampling)


def set_max_bound(reports: list[PmeprReport]):
    return max(r.max_bound for r in reports)


# -- set size -----------------------------------------------------------------
@dataclass
class BoundReport:
    K: int
    M: int
    N: int
    Z: int
    bound: int
    holds: bool
    optimal: bool


def set_size_bound_check(s: CodeSet, verification: ZccsVerification | None = None) -> BoundReport:
    """Compare the set size with ``M * (N - Z + 1)`` for the declared Z."""
    if verification is None:
        verification = verify_zccs(s)
    if not verification.passed:
        raise PreconditionError("set does not verify as a type-II ZCCS")
    bound = s.M * (s.N - s.Z + 1)
    return BoundReport(s.K, s.M, s.N, s.Z, bound, s.K <= bound, s.K == bound)


# -- length coverage ------------------------------------------------------------
@dataclass(frozen=True)
class Realization:
    N: int  # Golay pair length
    P: int  # seed length
    width: int


@dataclass
class CoverageEntry:
    length: int
    realizations: list
    in_compared_forms: bool

    @property
    def best(self) -> Realization:
        return max(self.realizations, key=lambda r: r.width)


def length_coverage(max_len: int) -> list[CoverageEntry]:
    """Every type-II ZCP length ``N*P <= max_len`` reachable from a supported Golay length N.

    ``in_compared_forms`` marks lengths of the form f*N with f in
    :data:`COMPARED_FORMS`, i.e. those the compared quadriphase family also reaches.
    """
    if max_len < 2:
        raise DomainError("max_len must be >= 2")
    gcp_lengths = [n for n in range(2, max_len + 1) if gcp_supported(n)]
    out = []
    for length in range(2, max_len + 1):
        reals = [
            Realization(n, length // n, length - length // n + 1)
            for n in gcp_lengths
            if length % n == 0
        ]
        if not reals:
            continue
        compared = any(length % f == 0 and gcp_supported(length // f) for f in COMPARED_FORMS)
        out.append(CoverageEntry(length, reals, compared))
    return out
