"""
Testes de validate(): aridade, nomes e polos
"""
import pytest

from core.catalog import build_named
from core.errors import SeriesValidationError
from core.schemas import (
    GammaRatioAtom,
    HornSeries,
    Parameter,
    ParamLinearAtom,
    PochhammerFactor,
    Variable,
    VarPowerAtom,
    with_parameter,
)
from utils.validators import ensure_valid, is_exceptional, validate, validate_series


def _codes(series):
    return [v.code for v in validate(series)]


def _series(params, factors, xs=(0.1, 0.2), prefactor=()):
    return HornSeries(
        variables=tuple(Variable(value=x) for x in xs),
        parameters=tuple(Parameter(name=n, value=v) for n, v in params),
        factors=tuple(factors),
        prefactor=tuple(prefactor),
    )


def test_well_formed_series(gauss_log):
    assert validate(gauss_log) == []
    assert validate_series(gauss_log) == (True, [])
    assert ensure_valid(gauss_log) is gauss_log


def test_denominator_pole(gauss_log):
    broken = with_parameter(gauss_log, "c", 0.0)
    assert _codes(broken) == ["denominator_pole"]
    ok, messages = validate_series(broken)
    assert not ok
    assert messages[0].startswith("denominator_pole")


def test_negative_integer_denominator_is_pole(gauss_log):
    assert "denominator_pole" in _codes(with_parameter(gauss_log, "c", -3.0))


def test_positive_integer_denominator_is_fine(gauss_log):
    assert validate(with_parameter(gauss_log, "c", 3.0)) == []


def test_coefficient_arity_mismatch():
    series = _series(
        [("a", 0.5)],
        [PochhammerFactor(param="a", coeffs=(1, 0, 1), placement="numerator")],
    )
    assert _codes(series) == ["coefficient_arity_mismatch"]


def test_unknown_parameter_and_duplicates():
    series = _series(
        [("a", 0.5), ("a", 0.7)],
        [PochhammerFactor(param="b", coeffs=(1, 0), placement="numerator")],
    )
    assert _codes(series) == ["duplicate_parameter", "unknown_parameter"]


def test_numerator_pole_with_negative_coefficient():
    # H1 tem (a)_{m-n}: a inteiro positivo cruza zero no produto descendente
    h1 = build_named("H1", [0.8, 0.6, 0.7, 1.2], [0.1, 0.1])
    assert "numerator_pole" in _codes(with_parameter(h1, "a", 2.0))


def test_prefactor_checks():
    series = _series(
        [("a", -1.0)],
        [],
        xs=(0.0, 0.2),
        prefactor=[
            VarPowerAtom(var=5, exponent=1),
            VarPowerAtom(var=0, exponent=-1),
            ParamLinearAtom(param="a", offset=1, exponent=-1),
            GammaRatioAtom(param="a", offset_numerator=0, offset_denominator=2),
            ParamLinearAtom(param="b", offset=0, exponent=1),
        ],
    )
    assert _codes(series) == [
        "var_power_out_of_range",
        "var_power_pole",
        "param_linear_pole",
        "gamma_ratio_pole",
        "unknown_parameter",
    ]


def test_ensure_valid_collects_all_violations(gauss_log):
    broken = with_parameter(gauss_log, "c", 0.0)
    with pytest.raises(SeriesValidationError) as exc:
        ensure_valid(broken)
    assert [v.code for v in exc.value.violations] == ["denominator_pole"]
    assert "denominator_pole" in str(exc.value)


@pytest.mark.parametrize("value,expected", [(0.0, True), (-2.0, True), (1.0, False), (-0.5, False)])
def test_is_exceptional(value, expected):
    assert is_exceptional(value) is expected
