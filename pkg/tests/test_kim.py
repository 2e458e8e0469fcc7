import pytest
from hypothesis import given
from hypothesis import strategies as st

from leecodes.kim import (
    power_sum,
    power_sum_profile,
    q_direct,
    q_formula,
    q_formula_coefficients,
    verify_kim_identity,
)
from leecodes.lee import BallSpec, enumerate_ball


def test_power_sum_examples():
    assert power_sum((0, 0, 0), 3) == 0
    assert power_sum((1, 2), 1) == 5
    assert power_sum((1, 2), 2) == 17
    with pytest.raises(ValueError):
        power_sum((1,), 0)


def test_q_direct_examples():
    assert q_direct((0, 0, 0), 2) == 0
    assert q_direct((1, 2), 1) == 70
    assert q_direct((1, 2), 2) == 742


def test_q_formula_matches_small_closed_forms():
    # k = 1: (4n+6) S_2 ; k = 2: (4n+18) S_4 + 12 S_2^2
    x = (1, 2)
    assert q_formula(x, 1) == (4 * 2 + 6) * 5 == 70
    assert q_formula(x, 2) == (4 * 2 + 18) * 17 + 12 * 25 == 742
    assert q_formula((0, 0, 0, 0), 3) == 0


def test_formula_coefficients():
    assert q_formula_coefficients(8, 1) == (38, {})
    assert q_formula_coefficients(8, 2) == (50, {(1, 1): 12})
    lead, cross = q_formula_coefficients(3, 3)
    assert lead == 64 + 14 and cross == {(1, 2): 2 * 15 + 2 * 15}


labels = st.lists(st.integers(-1000, 1000), min_size=1, max_size=8)


@given(labels, st.integers(1, 4))
def test_identity(x, k):
    assert q_direct(x, k) == q_formula(x, k)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5), st.integers(1, 3))
def test_q_is_the_ball_image_power_sum(x, k):
    n = len(x)
    ball = enumerate_ball(BallSpec(n, 2))
    assert q_direct(x, k) == sum(sum(a * b for a, b in zip(x, pt)) ** (2 * k) for pt in ball)


@given(labels, st.integers(-20, 20), st.integers(1, 4))
def test_homogeneity(x, c, k):
    assert q_direct([c * v for v in x], k) == c ** (2 * k) * q_direct(x, k)


@given(labels, st.integers(1, 4))
def test_even(x, k):
    assert q_direct([-v for v in x], k) == q_direct(x, k)


@pytest.mark.parametrize("n, k_max, label_range", [(2, 2, (-1000, 1000)), (1, 4, (-1000, 1000)), (5, 3, (-10, 10))])
def test_verify_kim_identity(n, k_max, label_range):
    report = verify_kim_identity(n, k_max, trials=200, seed=7, label_range=label_range)
    assert report.passed and report.checks == 200 * k_max


def test_verify_kim_identity_is_reproducible():
    a = verify_kim_identity(3, 2, trials=10, seed=1).to_dict()
    b = verify_kim_identity(3, 2, trials=10, seed=1).to_dict()
    assert a == b


def test_literal_x1_reading_breaks_identity():
    # the summand (-x_1)^(2k) taken literally instead of (-x_i)^(2k)
    def q_literal(x, k):
        p = 2 * k
        total = sum(v**p + (-x[0]) ** p + (2 * v) ** p + (-2 * v) ** p for v in x)
        for i in range(len(x)):
            for j in range(i + 1, len(x)):
                a, b = x[i], x[j]
                total += (a + b) ** p + (a - b) ** p + (-a + b) ** p + (-a - b) ** p
        return total

    x = (1, 2)
    assert q_literal(x, 1) != q_formula(x, 1)
    assert q_direct(x, 1) == q_formula(x, 1)


def test_power_sum_profile():
    prof = power_sum_profile((1, 2, 3), 2, p=5)
    assert prof.sums == {1: 14, 2: 98}
    assert prof.residues == {1: 4, 2: 3}
