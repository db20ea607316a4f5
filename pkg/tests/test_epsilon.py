"""
Testes da expansão em ε
"""
from fractions import Fraction

import pytest

from core.catalog import build_named
from core.derivatives import differentiate, epsilon_expand, exact_slope, multi_indices
from core.derivatives.epsilon import multinomial_weight
from core.evaluator import evaluate, evaluate_expansion
from core.oracle import epsilon_coefficient_oracle
from core.schemas import with_slopes


@pytest.fixture
def gauss_eps():
    """₂F₁(1,1;2-ε;0.3)"""
    return build_named("2F1", [1.0, 1.0, 2.0], [0.3], slopes={"c": -1.0})


def test_order_zero_is_input(gauss_eps):
    (coefficient,) = epsilon_expand(gauss_eps, 0)
    assert coefficient.terms == (gauss_eps,)


def test_negative_order_rejected(gauss_eps):
    with pytest.raises(ValueError):
        epsilon_expand(gauss_eps, -1)


def test_zero_slopes_give_empty_coefficients(gauss_log):
    coefficients = epsilon_expand(gauss_log, 2)
    assert len(coefficients) == 3
    assert [len(c) for c in coefficients[1:]] == [0, 0]
    assert [evaluate_expansion(c).value for c in coefficients[1:]] == [0.0, 0.0]


def test_coefficients_match_oracle(gauss_eps, opts):
    coefficients = epsilon_expand(gauss_eps, 2)
    assert evaluate_expansion(coefficients[0], opts).value == evaluate(gauss_eps, opts).value
    for k, coefficient in enumerate(coefficients):
        value = evaluate_expansion(coefficient, opts).value
        oracle = epsilon_coefficient_oracle(gauss_eps, k, opts).value
        assert value == pytest.approx(oracle, abs=1e-8)


def test_first_coefficient_is_minus_d_dc(gauss_eps, opts):
    first = evaluate_expansion(epsilon_expand(gauss_eps, 1)[1], opts).value
    d_dc = evaluate_expansion(differentiate(gauss_eps, "c"), opts).value
    assert first == pytest.approx(-d_dc, abs=1e-12)
    assert d_dc < 0 < first


def test_second_coefficient_carries_half_weight(gauss_eps):
    second = epsilon_expand(gauss_eps, 2)[2]
    assert second.terms
    for member in second.terms:
        const = [a for a in member.prefactor if a.kind == "const"]
        assert const and const[-1].fraction == Fraction(1, 2)


def test_multiple_slopes(opts):
    series = with_slopes(build_named("2F1", [0.5, 1.5, 2.5], [0.3]), {"a": 0.5, "c": -1.0})
    first = evaluate_expansion(epsilon_expand(series, 1)[1], opts).value
    d_da = evaluate_expansion(differentiate(series, "a"), opts).value
    d_dc = evaluate_expansion(differentiate(series, "c"), opts).value
    assert first == pytest.approx(0.5 * d_da - d_dc, abs=1e-12)
    assert first == pytest.approx(epsilon_coefficient_oracle(series, 1, opts).value, abs=1e-9)


def test_helpers():
    assert exact_slope(0.1) == Fraction(1, 10)
    assert exact_slope(-1.0) == Fraction(-1)
    assert list(multi_indices(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(multi_indices(3, 0)) == [(0, 0, 0)]
    assert multinomial_weight([Fraction(1, 2), Fraction(-1)], (2, 1)) == Fraction(-1, 8)
