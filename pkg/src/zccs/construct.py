"""Kronecker constructions of type-II Z-complementary codes.

Every construction replaces each row ``c`` of an input code by ``c (x) b``
for a unimodular seed ``b`` of length P.  Complementary properties of the
input survive at every shift of magnitude P or more, which places a zero
correlation zone of width ``N*P - P + 1`` at the end shifts.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ccc import verify_ccc
from .errors import DimensionError, DomainError, PreconditionError
from .kernels import GolayPair, OrthogonalFamily, check_orthogonal_family
from .sequences import (
    CodeMatrix,
    CodeSet,
    PhaseSequence,
    code_accs,
    kron,
    kron_code,
    zero_tolerance,
)


def as_sequence(b) -> PhaseSequence:
    """Accept a PhaseSequence or any array of unimodular values."""
    if isinstance(b, PhaseSequence):
        return b
    return PhaseSequence.from_values(b)


def _require_ccc(ccc: CodeSet):
    if ccc.kind == "CCC":
        return
    report = verify_ccc(ccc)
    if not report.passed:
        raise PreconditionError(f"input set is not a CCC ({report.classification})")


def _zccs_from_codes(codes, n, p, meta):
    # P = 1 reproduces the input code set unchanged
    kind = "CCC" if p == 1 else "type-II ZCCS"
    return CodeSet(codes, Z=n * p - p + 1, kind=kind, meta=meta)


def build_zccs(ccc: CodeSet, b) -> CodeSet:
    """Type-II (K, K, NP-P+1, NP)-ZCCS with codes ``C_i (x) b``.

    Raises
    ------
    DomainError
        If ``b`` is not unimodular.
    PreconditionError
        If ``ccc`` is not (and does not verify as) a complete complementary code.
    """
    b = as_sequence(b)
    _require_ccc(ccc)
    codes = [kron_code(c, b) for c in ccc.codes]
    meta = dict(ccc.meta)
    meta.update(seed_length=b.length)
    return _zccs_from_codes(codes, ccc.N, b.length, meta)


def build_zcs(cs: CodeMatrix, b) -> CodeMatrix:
    """Type-II ZCS ``cs (x) b`` of size M x NP from a complementary set ``cs``."""
    b = as_sequence(b)
    prof = code_accs(cs)
    n = cs.N
    mask = prof.zero_mask(zero_tolerance(cs.M, n))
    mask[n - 1] = True
    if not mask.all():
        tau = int(prof.lags[~mask][0])
        raise DomainError(f"input is not a complementary set: autocorrelation sum nonzero at shift {tau}")
    return kron_code(cs, b)


def build_zcp(g, b) -> tuple[PhaseSequence, PhaseSequence]:
    """Type-II ZCP ``(s (x) b, t (x) b)`` of length NP and zone width NP-P+1."""
    if not isinstance(g, GolayPair):
        s, t = g
        g = GolayPair(as_sequence(s), as_sequence(t))
    b = as_sequence(b)
    return kron(g.s, b), kron(g.t, b)


def barker_weight(z: CodeSet, gamma) -> CodeSet:
    """Multiply row m of every code by ``gamma[m]``.

    Any unimodular ``gamma`` of length M is accepted.  With a Barker
    ``gamma`` and a DFT-built input, every column autocorrelation has the
    same magnitudes as that of ``gamma``.
    """
    gamma = as_sequence(gamma)
    if gamma.length != z.M:
        raise DimensionError(f"weight length {gamma.length} != number of rows {z.M}")
    n = z.N
    if gamma.q:
        consts = [PhaseSequence(np.full(n, p), q=gamma.q) for p in gamma.phases]
    else:
        consts = [PhaseSequence(values=np.full(n, v), q=0) for v in gamma.values]
    codes = [CodeMatrix(row * w for row, w in zip(code.rows, consts)) for code in z.codes]
    meta = dict(z.meta)
    meta["row_weight_length"] = gamma.length
    return CodeSet(codes, Z=z.Z, kind=z.kind, meta=meta)


def expand_set(ccc: CodeSet, fam: OrthogonalFamily) -> CodeSet:
    """Type-II (rK, K, NP-P+1, NP)-ZCCS from a CCC and r sequences orthogonal to each other's conjugates.

    Codes are listed family-major: all ``C_k (x) b_1``, then all ``C_k (x) b_2``, ...
    """
    if not check_orthogonal_family(fam):
        raise DomainError("family members are not mutually orthogonal to conjugates")
    _require_ccc(ccc)
    codes = [kron_code(c, b) for b in fam for c in ccc.codes]
    meta = dict(ccc.meta)
    meta.update(seed_length=fam.P, expanded_by=fam.r, ordering="family-major")
    return _zccs_from_codes(codes, ccc.N, fam.P, meta)


@dataclass
class ZccsBuildRecipe:
    """Inputs of one construction and the parameters they promise.

    ``family`` (optional) replaces the single seed by r orthogonal seeds;
    ``weight`` (optional) is applied to the rows after the Kronecker step.
    """

    ccc: CodeSet
    seed: PhaseSequence | None = None
    family: OrthogonalFamily | None = None
    weight: PhaseSequence | None = None

    def __post_init__(self):
        if (self.seed is None) == (self.family is None):
            raise DomainError("give exactly one of seed or family")

    @property
    def P(self) -> int:
        return self.seed.length if self.seed is not None else self.family.P

    @property
    def r(self) -> int:
        return 1 if self.family is None else self.family.r

    @property
    def params(self) -> tuple[int, int, int, int]:
        """Declared ``(K', M, Z, N')`` of the output."""
        n, p = self.ccc.N, self.P
        return (self.r * self.ccc.K, self.ccc.M, n * p - p + 1, n * p)

    def build(self) -> CodeSet:
        if self.family is not None:
            out = expand_set(self.ccc, self.family)
        else:
            out = build_zccs(self.ccc, self.seed)
        if self.weight is not None:
            out = barker_weight(out, self.weight)
        return out
