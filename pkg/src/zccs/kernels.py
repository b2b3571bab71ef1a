"""Seed objects: Barker sequences, Golay complementary pairs, orthogonal families.

Golay kernels of length 10 and 26 come from a pruned exhaustive search
(:func:`search_golay_kernel`).  The search result is frozen below together
with a SHA-256 digest that is checked the first time a kernel is used.
"""
from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .errors import DimensionError, DomainError
from .sequences import (
    PhaseSequence,
    CodeMatrix,
    accs,
    correlation_profile,
    kron,
)

BARKER_LENGTHS = (2, 3, 4, 5, 7, 11, 13)

# one representative per length; the rest are reachable through BARKER_TRANSFORMS
_BARKER = {
    2: "+-",
    3: "++-",
    4: "++-+",
    5: "+++-+",
    7: "+++--+-",
    11: "+++---+--+-",
    13: "+++++--++-+-+",
}

BARKER_TRANSFORMS = ("negate", "reverse", "alternate")


class BarkerSequence(PhaseSequence):
    """A binary sequence whose off-peak autocorrelations all have magnitude 0 or 1."""

    __slots__ = ()

    def __init__(self, phases, q: int = 2):
        super().__init__(phases, q=q)
        if not is_barker(self):
            raise DomainError("sequence does not have the Barker sidelobe property")


def is_barker(a: PhaseSequence) -> bool:
    """True iff ``a`` is binary and every off-peak |autocorrelation| is 0 or 1."""
    if a.q != 2:
        return False
    prof = correlation_profile(PhaseSequence(a.phases, q=2))
    side = np.abs(prof.values.real)
    side[a.length - 1] = 0
    return bool(np.all(side <= 1))


def barker(P: int) -> BarkerSequence:
    """Canonical binary Barker sequence of length ``P``."""
    if P not in _BARKER:
        raise DomainError(f"no binary Barker sequence of length {P}; legal lengths are {BARKER_LENGTHS}")
    return BarkerSequence(PhaseSequence.from_signs(_BARKER[P]).phases)


def barker_transform(g: PhaseSequence, t) -> BarkerSequence:
    """Apply ``negate``, ``reverse``, ``alternate`` (multiply entry i by (-1)**i), or a list of them in order."""
    kinds = [t] if isinstance(t, str) else list(t)
    p = np.array(g.phases, dtype=np.int64)
    for kind in kinds:
        if kind == "negate":
            p = p + 1
        elif kind == "reverse":
            p = p[::-1]
        elif kind == "alternate":
            p = p + np.arange(len(p))
        else:
            raise DomainError(f"unknown transform {kind!r}; expected one of {BARKER_TRANSFORMS}")
    return BarkerSequence(p % 2)


def composite_barker(factors: Sequence[int]) -> PhaseSequence:
    """Left-to-right Kronecker product of canonical Barker sequences."""
    factors = list(factors)
    if not factors:
        raise DomainError("at least one Barker factor is required")
    out = barker(factors[0])
    for f in factors[1:]:
        out = kron(out, barker(f))
    return PhaseSequence(out.phases, q=2)


# -- Golay complementary pairs ----------------------------------------
@dataclass(frozen=True)
class GolayPair:
    """Two equal-length sequences whose autocorrelations cancel at every nonzero shift."""

    s: PhaseSequence
    t: PhaseSequence

    def __post_init__(self):
        if self.s.length != self.t.length:
            raise DimensionError("Golay pair members must share a length")
        prof = correlation_profile(self.s) + correlation_profile(self.t)
        mask = prof.zero_mask()
        mask[self.s.length - 1] = True
        if not mask.all():
            tau = int(prof.lags[~mask][0])
            raise DomainError(f"not a Golay pair: autocorrelation sum nonzero at shift {tau}")

    @property
    def length(self) -> int:
        return self.s.length

    def as_code(self) -> CodeMatrix:
        return CodeMatrix([self.s, self.t])


def _signs_key(n, s, t):
    enc = lambda v: "".join("+" if x > 0 else "-" for x in v)
    return f"{n}:{enc(s)}|{enc(t)}"


# produced by search_golay_kernel(n); digest of _signs_key(n, s, t)
GOLAY_KERNELS = {
    10: (
        (1, 1, -1, 1, -1, 1, -1, -1, 1, 1),
        (1, 1, -1, 1, 1, 1, 1, 1, -1, -1),
    ),
    26: (
        (1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, 1, 1, 1),
        (1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1, -1),
    ),
}
GOLAY_KERNEL_SHA256 = {
    10: "c5d6737bec72b5a3cbb4f612a50387ea58f68a975b738533022354dc24885746",
    26: "5b7540b3856a1f9e9d2fa0965f3c5f0f5f9ed58afaeb4b1f5346c636f38ddb6d",
}

_kernel_lock = threading.Lock()
_kernel_cache: dict[int, GolayPair] = {}


def search_golay_kernel(n: int):
    """Exhaustive search for a binary Golay pair of length ``n``.

    Positions are filled from both ends; after fixing the outer ``k + 1``
    entries on each side the shift ``n - 1 - k`` is fully determined, which
    prunes almost every branch.  Returns ``(s, t)`` as +1/-1 tuples, or None.
    """
    found = _backend.impl.golay_search(n)
    if found is None:
        return None
    return tuple(found[0]), tuple(found[1])


def golay_kernel(n: int) -> GolayPair:
    """Frozen search-derived Golay pair of length 10 or 26, digest-checked on first use."""
    with _kernel_lock:
        if n not in _kernel_cache:
            if n not in GOLAY_KERNELS:
                raise DomainError(f"no stored Golay kernel of length {n}")
            s, t = GOLAY_KERNELS[n]
            digest = hashlib.sha256(_signs_key(n, s, t).encode()).hexdigest()
            if digest != GOLAY_KERNEL_SHA256[n]:
                raise RuntimeError(f"Golay kernel {n} does not match its stored digest")
            _kernel_cache[n] = GolayPair(PhaseSequence.from_signs(s), PhaseSequence.from_signs(t))
        return _kernel_cache[n]


def golay_double(g: GolayPair) -> GolayPair:
    """(s, t) -> (s|t, s|-t), doubling the length."""
    s, t = g.s.phases, g.t.phases
    return GolayPair(
        PhaseSequence(np.concatenate([s, t]), q=2),
        PhaseSequence(np.concatenate([s, t + 1]), q=2),
    )


def golay_product(outer: GolayPair, inner: GolayPair) -> GolayPair:
    """Binary Golay pair of length ``len(outer) * len(inner)`` (Turyn-type product).

    With ``h = (a + b)/2`` and ``g = (a - b)/2`` from the inner pair ``(a, b)``
    (disjoint supports, entries in {0, +1, -1}) and outer pair ``(c, d)``::

        e = c (x) h + rev(d) (x) g
        f = d (x) h - rev(c) (x) g
    """
    a, b = inner.s.signs(), inner.t.signs()
    c, d = outer.s.signs(), outer.t.signs()
    h = (a + b) // 2
    g = (a - b) // 2
    e = np.kron(c, h) + np.kron(d[::-1], g)
    f = np.kron(d, h) - np.kron(c[::-1], g)
    return GolayPair(PhaseSequence.from_signs(e), PhaseSequence.from_signs(f))


def _gcp_factor(n: int):
    counts = {}
    for base in (26, 10, 2):
        k = 0
        while n % base == 0:
            n //= base
            k += 1
        counts[base] = k
    return counts, n


def gcp_supported(n: int) -> bool:
    counts, rest = _gcp_factor(n)
    return n >= 2 and rest == 1


def gcp(N: int) -> GolayPair:
    """Binary Golay pair of length ``N = 2**a * 10**b * 26**c``, ``N >= 2``."""
    counts, rest = _gcp_factor(N)
    if N < 2 or rest != 1:
        raise DomainError(f"no Golay pair construction for length {N}; need 2^a*10^b*26^c >= 2")
    pair = None
    for base in (10, 26):
        for _ in range(counts[base]):
            k = golay_kernel(base)
            pair = k if pair is None else golay_product(pair, k)
    if pair is None:
        one = PhaseSequence([0], q=2)
        pair = GolayPair(one, one)
    for _ in range(counts[2]):
        pair = golay_double(pair)
    return pair


# -- orthogonal families ------------------------------------------------
@dataclass(frozen=True)
class OrthogonalFamily:
    """Sequences intended to have pairwise zero inner product with conjugate."""

    members: tuple

    def __init__(self, members: Iterable[PhaseSequence]):
        object.__setattr__(self, "members", tuple(members))

    @classmethod
    def from_matrix(cls, matrix) -> "OrthogonalFamily":
        """One member per row of a +1/-1 (or unimodular complex) matrix."""
        return cls(PhaseSequence.from_values(row) for row in np.asarray(matrix))

    @property
    def r(self) -> int:
        return len(self.members)

    @property
    def P(self) -> int:
        return self.members[0].length

    def __len__(self):
        return self.r

    def __iter__(self):
        return iter(self.members)


def sylvester(P: int) -> np.ndarray:
    """Sylvester Hadamard matrix of order ``P`` (a power of two)."""
    if P < 1 or P & (P - 1):
        raise DomainError(f"Sylvester construction needs a power of two, got {P}")
    h = np.ones((1, 1), dtype=np.int64)
    while h.shape[0] < P:
        h = np.block([[h, h], [h, -h]])
    return h


def hadamard(P: int, matrix=None) -> OrthogonalFamily:
    """Rows of a Hadamard matrix as an orthogonal family.

    Powers of two use the Sylvester construction; other orders need a
    user-supplied ``matrix``.
    """
    if matrix is not None:
        fam = OrthogonalFamily.from_matrix(matrix)
        if fam.r != P or any(m.length != P for m in fam):
            raise DimensionError(f"supplied matrix is not {P} x {P}")
        return fam
    if P < 1 or P & (P - 1):
        raise DomainError(f"order {P} is not a power of two; supply a Hadamard matrix")
    return OrthogonalFamily.from_matrix(sylvester(P))


def check_orthogonal_family(fam: OrthogonalFamily, tol: float | None = None) -> bool:
    """True iff every distinct pair has zero inner product with conjugate."""
    members = fam.members
    if not members:
        return True
    p = members[0].length
    if any(m.length != p for m in members):
        raise DimensionError("family members have different lengths")
    if tol is None:
        tol = 1e-10 * p
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            v = accs(members[i], members[j], 0)
            if members[i].exact and members[j].exact:
                if v != 0:
                    return False
            elif abs(v) > tol:
                return False
    return True


# -- tail conditions on seeds -----------------------------------------------
@dataclass(frozen=True)
class TailReport:
    """Tail-shift autocorrelations of a seed and the binary predicates that control them.

    ``eq5`` is ``b0 + b1 + b[P-1] + b[P-2] == +-2`` (binary seeds only);
    ``system`` adds the two companion equations that also pin the P-3 shift
    (binary, ``P >= 6``).  Predicates are None where they do not apply.
    """

    P: int
    lam_p2: complex
    lam_p3: complex
    eq5: bool | None
    system: bool | None


def tail_conditions(b: PhaseSequence) -> TailReport:
    P = b.length
    if P < 4:
        raise DomainError(f"tail conditions need P >= 4, got {P}")
    lam2 = accs(b, b, P - 2)
    lam3 = accs(b, b, P - 3)
    eq5 = system = None
    if b.q == 2:
        x = b.signs()
        eq5 = abs(int(x[0] + x[1] + x[P - 1] + x[P - 2])) == 2
        if eq5 and lam2 != 0:
            raise AssertionError("binary seed satisfies the tail equation but shift P-2 is nonzero")
        if P >= 6:
            system = (
                eq5
                and abs(int(x[0] + x[1] + x[P - 3] + x[P - 2])) == 2
                and abs(int(x[1] + x[2] + x[P - 2] + x[P - 1])) == 2
            )
    return TailReport(P=P, lam_p2=lam2, lam_p3=lam3, eq5=eq5, system=system)
