"""
Fixtures compartilhadas dos testes
"""
import math

import pytest

from core.catalog import build_named
from core.schemas import EvalOptions, HornSeries


@pytest.fixture
def opts() -> EvalOptions:
    return EvalOptions(max_total_order=60, abs_tol=1e-12, rel_tol=1e-12, min_shells=8)


@pytest.fixture
def gauss_log() -> HornSeries:
    """₂F₁(1,1;2;0.5) = 2 ln 2"""
    return build_named("2F1", [1.0, 1.0, 2.0], [0.5])


@pytest.fixture
def binomial() -> HornSeries:
    """₁F₀(2;0.5) = (1-x)^-a = 4"""
    return build_named("1F0", [2.0], [0.5])


@pytest.fixture
def h3() -> HornSeries:
    return build_named("H3", [0.7, 0.9, 1.3], [0.08, 0.15])


@pytest.fixture
def g3() -> HornSeries:
    return build_named("G3", [0.6, 0.7], [0.05, 0.04])


@pytest.fixture
def h1() -> HornSeries:
    return build_named("H1", [0.8, 0.6, 0.7, 1.2], [0.1, 0.1])


@pytest.fixture
def f1() -> HornSeries:
    return build_named("F1", [0.3, 0.5, 0.7, 1.1], [0.25, 0.1])


LN2 = math.log(2.0)


@pytest.fixture
def full_opts() -> EvalOptions:
    """Soma todas as camadas (sem parada antecipada) para diferenças finitas de segunda ordem"""
    return EvalOptions(max_total_order=60, abs_tol=1e-300, rel_tol=1e-300, min_shells=8)
