"""
Testes do catálogo: layouts, reduções e valores de referência (mpmath)
"""
import math

import mpmath
import pytest

from config.catalog_config import ACCEPTANCE_FUNCTIONS, CATALOG, DENOMINATOR_PARAM_BOX, NUMERATOR_PARAM_BOX
from core.catalog import (
    CatalogSpec,
    GenLauricellaLayout,
    build,
    build_named,
    describe,
    example_spec,
    known_region,
    pfq_param_names,
    region_box,
    resolve_entry,
    sample_points,
)
from core.errors import ArityError, SeriesValidationError, UnknownParameterError
from core.evaluator import evaluate

mpmath.mp.dps = 30


def _value(series, opts):
    return evaluate(series, opts).value


def test_h3_layout():
    info = describe("H3")
    assert info["factors"][0] == {"param": "a", "coeffs": [2, 1], "placement": "numerator"}
    assert info["parameters"] == ["a", "b", "c"]
    assert info["n_vars"] == 2


@pytest.mark.parametrize("name,coeffs", [
    ("F1", [(1, 1), (1, 0), (0, 1), (1, 1)]),
    ("H1", [(1, -1), (1, 1), (0, 1), (1, 0)]),
    ("G3", [(-1, 2), (2, -1)]),
])
def test_two_variable_layouts(name, coeffs):
    series = build(example_spec(name))
    assert [f.coeffs for f in series.factors] == coeffs


def test_pfq_parameter_names():
    assert pfq_param_names(1, 0) == ("a",)
    assert pfq_param_names(2, 1) == ("a", "b", "c")
    assert pfq_param_names(3, 2) == ("a1", "a2", "a3", "b1", "b2")
    assert pfq_param_names(0, 0) == ()


def test_exponential(opts):
    series = build_named("0F0", [], [0.7])
    assert _value(series, opts) == pytest.approx(math.exp(0.7), abs=1e-12)


def test_generic_pfq_with_explicit_orders(opts):
    spec = CatalogSpec(name="pFq", p=2, q=1, params=[1.0, 1.0, 2.0], vars=[0.5])
    assert _value(build(spec), opts) == pytest.approx(2 * math.log(2.0), abs=1e-11)
    with pytest.raises(ArityError):
        build(CatalogSpec(name="pFq", params=[1.0], vars=[0.5]))


@pytest.mark.parametrize("x", [0.1, 0.3, -0.4, 0.5])
def test_gauss_log_closed_form(x, opts):
    series = build_named("2F1", [1.0, 1.0, 2.0], [x])
    assert _value(series, opts) == pytest.approx(-math.log1p(-x) / x, abs=1e-12)


def test_binomial_closed_form(opts):
    assert _value(build_named("1F0", [2.0], [0.5]), opts) == pytest.approx(4.0, abs=1e-11)


def test_gauss_against_mpmath(opts):
    series = build_named("2F1", [0.5, 1.5, 2.5], [0.3])
    assert _value(series, opts) == pytest.approx(float(mpmath.hyp2f1(0.5, 1.5, 2.5, 0.3)), rel=1e-12)


def test_clausen_against_mpmath(opts):
    params = [0.5, 0.7, 0.9, 1.3, 1.6]
    series = build_named("3F2", params, [0.4])
    want = mpmath.hyper(params[:3], params[3:], 0.4)
    assert _value(series, opts) == pytest.approx(float(want), rel=1e-12)


@pytest.mark.parametrize("name,fn", [
    ("F1", mpmath.appellf1),
    ("F2", mpmath.appellf2),
    ("F3", mpmath.appellf3),
    ("F4", mpmath.appellf4),
])
def test_appell_against_mpmath(name, fn, opts):
    series = build(example_spec(name))
    want = fn(*series.param_values.values(), *series.x_values)
    assert _value(series, opts) == pytest.approx(float(want), rel=1e-11)


@pytest.mark.parametrize("lauricella,appell", [("FA", "F2"), ("FB", "F3"), ("FC", "F4"), ("FD", "F1")])
def test_lauricella_two_variables_is_appell(lauricella, appell, opts):
    spec = example_spec(appell)
    a = build(CatalogSpec(name=lauricella, params=spec.params, vars=spec.vars))
    b = build(spec)
    assert a.param_names == b.param_names
    assert _value(a, opts) == pytest.approx(_value(b, opts), rel=1e-14)


def test_lauricella_fd_three_variables_against_mpmath(opts):
    series = build(example_spec("FD"))
    a, b1, b2, b3, c = series.param_values.values()
    x, y, z = series.x_values
    # FD(a; b; c; x, y, 0) = F1
    reduced = build_named("FD", [a, b1, b2, b3, c], [x, y, 0.0])
    assert _value(reduced, opts) == pytest.approx(float(mpmath.appellf1(a, b1, b2, c, x, y)), rel=1e-12)
    assert series.n_vars == 3


def test_kampe_de_feriet_example_is_appell_f1(opts):
    kdf = build(example_spec("KdF"))
    assert kdf.param_names == ["a1", "b1_1", "b2_1", "c1"]
    f1 = build_named("F1", [0.3, 0.5, 0.7, 1.1], [0.25, 0.1])
    assert _value(kdf, opts) == pytest.approx(_value(f1, opts), rel=1e-14)


def test_generalized_lauricella_example_is_h3(opts):
    gen = build(example_spec("GenLauricella"))
    assert [f.coeffs for f in gen.factors] == [(2, 1), (0, 1), (1, 1)]
    h3 = build_named("H3", [0.7, 0.9, 1.3], [0.08, 0.15])
    assert _value(gen, opts) == pytest.approx(_value(h3, opts), rel=1e-14)


def test_generalized_lauricella_arity_check():
    layout = GenLauricellaLayout(theta=[[1, 1, 1]])
    with pytest.raises(ArityError):
        build(CatalogSpec(name="GenLauricella", params=[0.5], vars=[0.1, 0.1], layout=layout))


def test_named_parameters():
    by_name = build_named("F1", {"c": 1.1, "a": 0.3, "b1": 0.5, "b2": 0.7}, [0.25, 0.1])
    assert by_name == build_named("F1", [0.3, 0.5, 0.7, 1.1], [0.25, 0.1])
    with pytest.raises(UnknownParameterError):
        build_named("F1", {"a": 0.3, "b1": 0.5, "b2": 0.7, "z": 1.1}, [0.25, 0.1])
    with pytest.raises(ArityError):
        build_named("F1", {"a": 0.3}, [0.25, 0.1])


def test_arity_errors():
    with pytest.raises(ArityError):
        build_named("F1", [0.3, 0.5, 0.7], [0.25, 0.1])
    with pytest.raises(ArityError):
        build_named("H3", [0.7, 0.9, 1.3], [0.1])


def test_slopes_are_bound():
    series = build_named("2F1", [1.0, 1.0, 2.0], [0.3], slopes={"c": -1.0})
    assert series.get_parameter("c").epsilon_slope == -1.0
    with pytest.raises(UnknownParameterError):
        build_named("2F1", [1.0, 1.0, 2.0], [0.3], slopes={"d": 1.0})


def test_build_rejects_pole():
    with pytest.raises(SeriesValidationError):
        build_named("2F1", [1.0, 1.0, 0.0], [0.3])


def test_unknown_name():
    with pytest.raises(LookupError):
        resolve_entry("F9")
    assert resolve_entry("4F3").name == "pFq"


@pytest.mark.parametrize("name,xs,expected", [
    ("2F1", [0.9], True),
    ("2F1", [1.1], False),
    ("1F1", [50.0], True),
    ("3F1", [0.1], False),
    ("F1", [0.9, 0.9], True),
    ("F2", [0.6, 0.6], False),
    ("F4", [0.2, 0.2], True),
    ("F4", [0.3, 0.3], False),
    ("H3", [0.1, 0.1], None),
])
def test_known_region(name, xs, expected):
    assert known_region(name, xs) is expected


def test_sample_points_are_deterministic_and_in_box():
    first = sample_points("F2", 5)
    assert first == sample_points("F2", 5)
    assert first != sample_points("F2", 5, seed=7)
    box = CATALOG["F2"].var_box
    for spec in first:
        a, b1, b2, c1, c2 = spec.params
        for p in (a, b1, b2):
            assert NUMERATOR_PARAM_BOX[0] <= p <= NUMERATOR_PARAM_BOX[1]
        for p in (c1, c2):
            assert DENOMINATOR_PARAM_BOX[0] <= p <= DENOMINATOR_PARAM_BOX[1]
        assert all(abs(x) <= box for x in spec.vars)


@pytest.mark.parametrize("name,box", [
    ("F1", 0.9),
    ("F2", 0.45),
    ("F4", 0.2025),
    ("2F1", 0.9),
    ("H3", 0.1),
])
def test_region_box(name, box):
    assert region_box(name) == pytest.approx(box)


@pytest.mark.parametrize("name", ["F1", "F2", "F3", "F4", "2F1", "3F2"])
def test_region_box_points_stay_inside(name):
    for spec in sample_points(name, 20, var_box=region_box(name)):
        assert known_region(name, spec.vars) is True


def test_region_box_lauricella_scales_with_dimension():
    assert region_box("FA", n_vars=3) == pytest.approx(0.3)
    assert region_box("FC", n_vars=3) == pytest.approx(0.09)


@pytest.mark.parametrize("name", ACCEPTANCE_FUNCTIONS)
def test_sample_points_build(name):
    for spec in sample_points(name, 3):
        build(spec)


def test_sample_points_lauricella_dimension():
    specs = sample_points("FC", 2, n_vars=4)
    assert all(len(s.vars) == 4 for s in specs)
    assert all(len(s.params) == 6 for s in specs)
