import numpy as np
import pytest

from zccs import cyclotomic as cy
from zccs.errors import DimensionError, DomainError
from zccs.sequences import PhaseSequence, correlation_profile


@pytest.mark.parametrize("q, coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_known_polynomials(q, coeffs):
    assert cy.cyclotomic_polynomial(q) == coeffs


@pytest.mark.parametrize("q", [3, 5, 7, 8, 9, 10, 12, 15])
def test_roots(q):
    coeffs = cy.cyclotomic_polynomial(q)
    w = np.exp(2j * np.pi / q)
    assert abs(np.polyval(coeffs[::-1], w)) < 1e-9


def test_sum_of_all_roots_is_zero():
    for q in (3, 5, 6, 7, 13):
        assert cy.is_zero([1] * q, q)
        assert not cy.is_zero([1] + [0] * (q - 1), q)


def test_abs2():
    # 1 + w for q = 6 has modulus sqrt(3)
    assert cy.abs2_equals([1, 1, 0, 0, 0, 0], 6, 3)
    assert not cy.abs2_equals([1, 1, 0, 0, 0, 0], 6, 2)


def test_errors():
    with pytest.raises(DimensionError):
        cy.reduce([1, 2], 3)
    with pytest.raises(DomainError):
        cy.cyclotomic_polynomial(0)
    with pytest.raises(DomainError):
        cy.accs_counts(PhaseSequence(values=[np.exp(0.2j)], q=0), PhaseSequence([0], q=2), 0)


def test_profile_counts_agree_with_float(rng):
    a = PhaseSequence(rng.integers(0, 5, 11), q=5)
    b = PhaseSequence(rng.integers(0, 5, 11), q=5)
    counts, q = cy.profile_counts(a, b)
    prof = correlation_profile(a, b).values
    for row, v in zip(counts, prof):
        assert abs(cy.to_complex(row, q) - v) < 1e-9
        assert cy.is_zero(row, q) == (abs(v) < 1e-9)


def test_mixed_orders():
    counts, q = cy.accs_counts(PhaseSequence([0, 1], q=2), PhaseSequence([0, 1], q=3), 0)
    assert q == 6
