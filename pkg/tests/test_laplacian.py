from fractions import Fraction

import pytest

from qhodge import laplacian as lap, qalgebra as qa
from qhodge.scalar import Q, eval_at, qnum, symbol


def test_sigma_branch_is_lower_sign():
    assert lap.branch_sign("sigma") == -1
    assert lap.branch_sign("other") == 1


@pytest.mark.parametrize("n,tj", list(qa.valid_nJ(1, 2)))
def test_sigma_spectrum_matches_oracle(n, tj):
    alpha = symbol("alpha")
    assert lap.oracle_eigenvalue("L", "sigma", alpha, n, tj) == lap.box_eigenvalue("L", "sigma", alpha, n, tj)
    assert lap.oracle_eigenvalue("R", "sigma", alpha, n, tj) == lap.box_eigenvalue("L", "sigma", alpha, n, tj)


@pytest.mark.parametrize("n,tj", list(qa.valid_nJ(1, 2)))
def test_other_spectrum_matches_oracle(n, tj):
    for side in lap.SIDES:
        assert lap.oracle_eigenvalue(side, "other", 1, n, tj) == lap.box_eigenvalue(side, "other", 1, n, tj)


def test_right_action_reading_not_diagonal_on_other_branch():
    assert lap.oracle_eigenvalue("R", "other", 1, 1, 1, "right") is None


def test_deltaq():
    assert lap.deltaq_eigenvalue(0, 0).is_zero()
    c = qnum(2) * qnum(4)
    expected = 2 * Q * c / (Q ** 2 + 1) + ((Q - Q ** -1) / (Q + Q ** -1)) ** 2 * c ** 2
    assert lap.deltaq_eigenvalue(0, 2) == expected
    assert eval_at(lap.deltaq_eigenvalue(0, 2), 1).as_fraction() == 2


def test_cli_example_value():
    scan = lap.scan_spectrum("sigma", 1, Fraction(1, 2), 0, 2)
    row = [e for e in scan.entries if (e.n, e.two_j) == (0, 2)][0]
    assert row.value == Fraction(5, 2)


def test_other_scan_has_both_signs():
    scan = lap.scan_spectrum("other", 1, Fraction(1, 2), 8, 8)
    assert scan.has_negative and scan.has_positive
    assert scan.minimum == Fraction(-7398315, 32768)


def test_errors():
    with pytest.raises(lap.LaplacianError):
        lap.box_eigenvalue("L", "sigma", 1, 1, 0)
    with pytest.raises(lap.LaplacianError):
        lap.scan_spectrum("sigma", 1, Fraction(3, 2))
    with pytest.raises(lap.LaplacianError):
        lap.box_apply("L", "sigma", 1, qa.A ** 13)
