import mpmath
import pytest

from ordmult.accel import accelerated_sum, euler_average, partial_sums


def test_alternating_harmonic():
    terms = [mpmath.mpf(-1) ** n / (n + 1) for n in range(60)]
    with mpmath.workdps(30):
        target = mpmath.log(2)
    assert abs(partial_sums(terms)[-1] - target) > 1e-3
    assert abs(accelerated_sum(terms, depth=20) - target) < 1e-12


def test_depth_zero_is_plain_partial_sum():
    assert euler_average([1, 2, 3], 0) == 3
    assert euler_average([1, 3], 1) == 2


def test_needs_enough_partial_sums():
    with pytest.raises(ValueError):
        euler_average([1, 2], 5)
    with pytest.raises(ValueError):
        euler_average([1, 2], -1)
