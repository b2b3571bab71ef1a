import hashlib
import itertools

import numpy as np
import pytest

from zccs import kernels
from zccs.errors import DimensionError, DomainError
from zccs.kernels import (
    BARKER_LENGTHS,
    GOLAY_KERNELS,
    GolayPair,
    OrthogonalFamily,
    barker,
    barker_transform,
    check_orthogonal_family,
    composite_barker,
    gcp,
    gcp_supported,
    golay_double,
    golay_kernel,
    golay_product,
    hadamard,
    is_barker,
    search_golay_kernel,
    sylvester,
    tail_conditions,
)
from zccs.sequences import PhaseSequence, correlation_profile, kron, kron_correlation_profile

from conftest import naive_profile


def S(text):
    return PhaseSequence.from_signs(text)


def sidelobes(x):
    prof = naive_profile(np.asarray(x, dtype=complex))
    n = len(x)
    return np.delete(prof, n - 1)


class TestBarker:
    @pytest.mark.parametrize("P", BARKER_LENGTHS)
    def test_sidelobes_at_most_one(self, P):
        b = barker(P)
        assert b.length == P
        assert np.max(np.abs(sidelobes(b.signs()))) <= 1

    def test_barker13_peak(self):
        assert correlation_profile(barker(13)).at(0) == 13

    @pytest.mark.parametrize("P", [1, 6, 8, 9, 14])
    def test_illegal_lengths(self, P):
        with pytest.raises(DomainError, match="2, 3, 4, 5, 7, 11, 13"):
            barker(P)

    def test_only_known_lengths_up_to_13(self):
        # brute force: a binary Barker sequence exists for exactly the listed lengths
        found = set()
        for P in range(2, 14):
            for bits in itertools.product((1, -1), repeat=P):
                if bits[0] == -1:
                    continue
                if np.max(np.abs(sidelobes(bits))) <= 1:
                    found.add(P)
                    break
        assert found == set(BARKER_LENGTHS)

    @pytest.mark.parametrize("P", BARKER_LENGTHS)
    @pytest.mark.parametrize("t", ["negate", "reverse", "alternate"])
    def test_transforms_stay_barker(self, P, t):
        out = barker_transform(barker(P), t)
        assert is_barker(out)

    def test_transform_composition(self):
        out = barker_transform(barker(5), ["negate", "reverse"])
        assert out.signs().tolist() == (-barker(5).signs()[::-1]).tolist()

    def test_unknown_transform(self):
        with pytest.raises(DomainError):
            barker_transform(barker(3), "rotate")

    def test_is_barker_rejects(self):
        assert not is_barker(S("++++"))

    def test_composite_correlation(self):
        c = composite_barker([3, 3])
        assert c.length == 9
        expected = kron_correlation_profile(correlation_profile(barker(3)), correlation_profile(barker(3)))
        assert correlation_profile(c) == expected
        np.testing.assert_array_equal(correlation_profile(c).values, naive_profile(c.values))

    def test_composite_2x5(self):
        assert composite_barker([2, 5]) == kron(barker(2), barker(5))


class TestGolay:
    @pytest.mark.parametrize("n", [10, 26])
    def test_kernel_digest(self, n):
        s, t = GOLAY_KERNELS[n]
        key = kernels._signs_key(n, s, t)
        assert hashlib.sha256(key.encode()).hexdigest() == kernels.GOLAY_KERNEL_SHA256[n]

    def test_search_reproduces_kernel_10(self):
        assert search_golay_kernel(10) == GOLAY_KERNELS[10]

    def test_search_absent_length(self):
        assert search_golay_kernel(18) is None

    def test_kernel_unknown(self):
        with pytest.raises(DomainError):
            golay_kernel(20)

    def test_pair_validation(self):
        with pytest.raises(DomainError):
            GolayPair(S("++"), S("++"))
        with pytest.raises(DimensionError):
            GolayPair(S("++"), S("+"))

    def test_double_and_product(self):
        g = golay_double(golay_kernel(10))
        assert g.length == 20
        g = golay_product(golay_kernel(10), golay_kernel(26))
        assert g.length == 260

    @pytest.mark.parametrize("N", [n for n in range(1, 417) if gcp_supported(n)])
    def test_all_supported_lengths(self, N):
        g = gcp(N)
        assert g.length == N
        total = naive_profile(g.s.values) + naive_profile(g.t.values)
        total[N - 1] -= 2 * N
        assert not np.any(np.abs(total))

    def test_supported_set(self):
        supported = [n for n in range(1, 60) if gcp_supported(n)]
        assert supported == [2, 4, 8, 10, 16, 20, 26, 32, 40, 52]

    @pytest.mark.parametrize("N", [1, 3, 6, 12, 14, 18])
    def test_unsupported(self, N):
        with pytest.raises(DomainError):
            gcp(N)


class TestOrthogonal:
    @pytest.mark.parametrize("P", [1, 2, 4, 8, 16])
    def test_sylvester(self, P):
        h = sylvester(P)
        np.testing.assert_array_equal(h @ h.T, P * np.eye(P))

    def test_sylvester_bad(self):
        with pytest.raises(DomainError):
            sylvester(12)
        with pytest.raises(DomainError):
            hadamard(6)

    def test_hadamard_family(self):
        fam = hadamard(8)
        assert fam.r == 8 and fam.P == 8
        assert check_orthogonal_family(fam)

    def test_user_matrix(self):
        h = sylvester(4)
        assert check_orthogonal_family(hadamard(4, matrix=h))
        with pytest.raises(DimensionError):
            hadamard(8, matrix=h)

    def test_not_orthogonal(self):
        fam = OrthogonalFamily([S("++"), S("++")])
        assert not check_orthogonal_family(fam)

    def test_ragged(self):
        with pytest.raises(DimensionError):
            check_orthogonal_family(OrthogonalFamily([S("++"), S("+")]))

    def test_complex_family(self):
        w = np.exp(2j * np.pi / 3)
        fam = OrthogonalFamily.from_matrix([[w ** (i * j) for j in range(3)] for i in range(3)])
        assert check_orthogonal_family(fam)


class TestTail:
    def test_short(self):
        with pytest.raises(DomainError):
            tail_conditions(barker(3))

    def test_barker13(self):
        r = tail_conditions(barker(13))
        assert r.eq5 and r.lam_p2 == 0
        assert abs(r.lam_p3) == 1

    @pytest.mark.parametrize("P", [6, 7, 8])
    def test_system_pins_p3(self, P):
        for bits in itertools.product((0, 1), repeat=P):
            r = tail_conditions(PhaseSequence(bits, q=2))
            if r.system:
                assert r.lam_p2 == 0
                assert abs(r.lam_p3) == 1

    def test_non_binary_has_no_predicate(self):
        r = tail_conditions(PhaseSequence([0, 1, 2, 3, 1], q=4))
        assert r.eq5 is None and r.system is None
