import numpy as np
import pytest

from zccs.ccc import ccc_dft, ccc_table1, verify_ccc
from zccs.errors import DomainError
from zccs.sequences import CodeMatrix, CodeSet, PhaseSequence

from conftest import naive_profile


def brute_ccc(codes, tol=1e-9):
    """Every pair against the definition, via plain loops."""
    K = len(codes)
    M, N = codes[0].shape
    for i in range(K):
        for j in range(K):
            tot = sum(naive_profile(codes[i][m], codes[j][m]) for m in range(M))
            target = np.zeros(2 * N - 1)
            if i == j:
                target[N - 1] = M * N
            if np.max(np.abs(tot - target)) > tol:
                return False
    return True


@pytest.mark.parametrize("K", range(2, 17))
def test_dft_is_ccc(K):
    s = ccc_dft(K)
    assert s.params == (K, K, K, K)
    assert s.exact == (K in (2, 4))
    report = verify_ccc(s)
    assert report.passed, report.violations[:3]
    if K <= 7:
        assert brute_ccc([c.values for c in s.codes])


def test_dft_small_K():
    with pytest.raises(DomainError):
        ccc_dft(1)


def test_dft_column_structure():
    K = 5
    w = np.exp(2j * np.pi / K)
    for k, code in enumerate(ccc_dft(K).codes):
        for n in range(K):
            expected = w ** (-k * n) * w ** (np.arange(K) * n)
            np.testing.assert_allclose(code.column(n).values, expected, atol=1e-12)


def test_table1_matches_transcription(table1_signs):
    s = ccc_table1()
    np.testing.assert_array_equal(np.array([[r.signs() for r in c.rows] for c in s.codes]), table1_signs)
    assert brute_ccc(table1_signs)


def test_table1_verifies():
    r = verify_ccc(ccc_table1())
    assert r.passed and r.exact and r.classification == "CCC"
    assert max(r.worst.values()) == 0


def test_single_sign_flip_detected():
    s = ccc_table1()
    rows = list(s.codes[2].rows)
    ph = rows[1].phases.copy()
    ph[3] ^= 1
    rows[1] = PhaseSequence(ph, q=2)
    codes = list(s.codes)
    codes[2] = CodeMatrix(rows)
    r = verify_ccc(CodeSet(codes, Z=8))
    assert not r.passed
    assert r.classification == "fail"
    v = r.violations[0]
    assert 2 in (v.i, v.j)


def test_not_square():
    s = ccc_table1()
    r = verify_ccc(CodeSet(s.codes[:3], Z=8))
    assert not r.passed
    assert r.classification == "not CCC (K != M)"


def test_inexact_tolerance():
    r = verify_ccc(ccc_dft(7))
    assert r.passed and not r.exact
    assert max(r.worst.values()) < 1e-10 * 49
