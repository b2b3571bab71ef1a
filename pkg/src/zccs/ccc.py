"""Complete complementary codes: DFT construction, the binary (4,4,8) table, verification."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError
from .sequences import CodeMatrix, CodeSet, code_accs, zero_tolerance

# binary (4, 4, 8)-CCC; '+' is 1 and '-' is -1
TABLE1 = (
    """
    -++++++-
    --+-+-++
    -+--++-+
    +++--+++
    """,
    """
    --+-+-++
    -++++++-
    ---++---
    +-++--+-
    """,
    """
    -+--++-+
    +++--+++
    -++++++-
    --+-+-++
    """,
    """
    +++--+++
    -+--++-+
    ++-+-+--
    +------+
    """,
)


def ccc_table1() -> CodeSet:
    """The binary (4, 4, 8)-CCC used as the worked example input."""
    codes = [CodeMatrix.from_signs(block) for block in TABLE1]
    return CodeSet(codes, Z=8, kind="CCC", meta={"source": "table1"})


def ccc_dft(K: int) -> CodeSet:
    """(K, K, K)-CCC over the K-th roots of unity.

    Code k has entries ``w**(m*n - k*n)`` at row m, column n, so column n of
    every code is the unimodular constant ``w**(-k*n)`` times the character
    vector ``(w**(m*n))_m``.
    """
    if K < 2:
        raise DomainError(f"DFT construction needs K >= 2, got {K}")
    m = np.arange(K)[:, None]
    n = np.arange(K)[None, :]
    codes = [CodeMatrix.from_phases((m * n - k * n) % K, q=K) for k in range(K)]
    return CodeSet(codes, Z=K, kind="CCC", meta={"source": f"dft:{K}"})


@dataclass
class Violation:
    """A shift where a code pair misses its required value (zero, or the peak at tau = 0)."""

    i: int
    j: int
    tau: int
    value: complex


@dataclass
class CccReport:
    """Outcome of :func:`verify_ccc`.

    ``worst`` maps each code pair ``(i, j)`` to the largest correlation
    magnitude at a shift where the CCC definition requires zero.
    """

    passed: bool
    classification: str
    exact: bool
    worst: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def verify_ccc(s: CodeSet, tol: float | None = None) -> CccReport:
    """Check the complete-complementary properties of every code pair.

    Sets with ``K != M`` cannot be CCCs; they are reported with
    classification ``"not CCC (K != M)"`` instead of raising.
    """
    codes = s.codes
    if len({(c.M, c.N) for c in codes}) != 1:
        raise DimensionError("ragged code set")
    exact = s.exact
    if tol is None:
        tol = zero_tolerance(s.M, s.N)
    if s.K != s.M:
        return CccReport(False, "not CCC (K != M)", exact)
    n = s.N
    peak = s.M * n
    worst = {}
    violations = []
    for i, ci in enumerate(codes):
        for j, cj in enumerate(codes):
            prof = code_accs(ci, cj)
            vals = prof.values.copy()
            if i == j:
                centre = vals[n - 1]
                bad_peak = centre != peak if exact else abs(centre - peak) > tol
                if bad_peak:
                    violations.append(Violation(i, j, 0, complex(centre)))
                vals[n - 1] = 0
            mags = np.abs(vals)
            worst[(i, j)] = float(mags.max(initial=0.0))
            nz = mags > 0 if exact else mags > tol
            if nz.any():
                k = int(np.flatnonzero(nz)[0])
                violations.append(Violation(i, j, k - (n - 1), complex(prof.values[k])))
    passed = not violations
    return CccReport(passed, "CCC" if passed else "fail", exact, worst, violations)
