"""
Testes dos oráculos independentes e do relatório de verificação
"""
import math

import pytest

from config.catalog_config import ACCEPTANCE_FUNCTIONS
from core.catalog import build, build_named, example_spec
from core.oracle import (
    VerificationReport,
    VerifyTolerances,
    central_difference,
    central_difference_mixed,
    digamma_derivative,
    epsilon_coefficient_oracle,
    observed_order,
    verify,
)
from core.schemas import EvalOptions, HornSeries, Parameter, PochhammerFactor, Variable

from tests.conftest import LN2


def test_digamma_derivative_binomial(binomial, opts):
    result = digamma_derivative(binomial, "a", opts)
    assert result.value == pytest.approx(2.77258872224, abs=1e-10)
    assert result.converged


def test_digamma_derivative_at_zero_variables(opts):
    series = build_named("F1", [0.3, 0.5, 0.7, 1.1], [0.0, 0.0])
    for param in series.param_names:
        assert digamma_derivative(series, param, opts).value == 0.0


def test_denominator_derivative_is_negative(opts):
    # aumentar c diminui todos os termos de ₂F₁(1,1;c;0.3)
    series = build_named("2F1", [1.0, 1.0, 2.0], [0.3])
    assert digamma_derivative(series, "c", opts).value < 0


def test_second_order_oracle(binomial, opts):
    half = epsilon_coefficient_oracle(binomial, 2, opts, slopes={"a": 1.0}).value
    assert 2 * half == pytest.approx(4 * LN2 ** 2, abs=1e-9)


def test_oracle_order_zero_is_value(binomial, opts):
    assert epsilon_coefficient_oracle(binomial, 0, opts).value == pytest.approx(4.0, abs=1e-11)
    with pytest.raises(ValueError):
        epsilon_coefficient_oracle(binomial, -1, opts)


def test_central_difference_binomial(binomial, opts):
    assert central_difference(binomial, "a", 1e-4, opts) == pytest.approx(4 * LN2, abs=1e-7)


def test_central_difference_of_absent_parameter(opts):
    series = HornSeries(
        variables=(Variable(value=0.3),),
        parameters=(Parameter(name="a", value=0.5), Parameter(name="p", value=1.7)),
        factors=(PochhammerFactor(param="a", coeffs=(1,), placement="numerator"),),
    )
    assert central_difference(series, "p", 1e-4, opts) == pytest.approx(0.0, abs=1e-12)


def test_central_difference_mixed_same_parameter(binomial, full_opts):
    assert central_difference_mixed(binomial, "a", "a", 1e-3, full_opts) == pytest.approx(4 * LN2 ** 2, abs=1e-5)


ORDER_CASES = [
    (name, param)
    for name in ACCEPTANCE_FUNCTIONS
    for param in build(example_spec(name)).param_names
]


def test_observed_order_is_two(binomial, opts):
    orders = observed_order(binomial, "a", opts=opts)
    assert len(orders) == 2
    for order in orders:
        assert 1.8 <= order <= 2.2


@pytest.mark.parametrize("name,param", ORDER_CASES)
def test_observed_order_catalog(name, param, opts):
    series = build(example_spec(name))
    orders = observed_order(series, param, opts=opts)
    defined = [o for o in orders if not math.isnan(o)]
    assert defined
    for order in defined:
        assert 1.8 <= order <= 2.2


def test_observed_order_below_rounding_floor_is_undefined(opts):
    # com x minúsculo o erro do estêncil fica abaixo do arredondamento
    series = build_named("2F1", [0.5, 0.7, 1.3], [1e-9])
    orders = observed_order(series, "a", opts=opts)
    assert len(orders) == 2
    assert all(math.isnan(o) for o in orders)


def test_verify_gauss_passes(opts):
    series = build_named("2F1", [0.5, 1.5, 2.5], [0.3])
    report = verify(series, "a", opts=opts)
    assert isinstance(report, VerificationReport)
    assert report.status == "pass"
    assert report.converged
    assert report.member_count == 1
    assert report.failures == []
    assert set(report.deviations) == {"engine_vs_oracle", "engine_vs_finite_difference", "oracle_vs_finite_difference"}
    assert report.deviations["engine_vs_oracle"] <= 1e-9


def test_verify_h1_passes(h1, opts):
    assert verify(h1, "a", opts=opts).status == "pass"


def test_verify_outside_region_is_not_a_failure():
    series = build_named("2F1", [0.5, 1.5, 2.5], [1.5])
    report = verify(series, "a", opts=EvalOptions(max_total_order=30, min_shells=8))
    assert report.status == "not_converged"
    assert not report.converged


def test_verify_unknown_parameter_fails(h1):
    report = verify(h1, "zz")
    assert report.status == "fail"
    assert len(report.failures) == 3


def test_verify_tolerances():
    tolerances = VerifyTolerances.from_settings()
    assert tolerances.oracle_rel_tol == 1e-9
    assert tolerances.finite_difference_abs_tol == 1e-6
    assert tolerances.step == 1e-4
    strict = VerifyTolerances(oracle_rel_tol=1e-30, finite_difference_abs_tol=1e-30)
    report = verify(build_named("2F1", [0.5, 1.5, 2.5], [0.3]), "c", strict)
    assert report.status == "fail"
    assert report.failures
    assert not math.isnan(report.engine)
