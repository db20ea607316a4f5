"""
Oráculos Independentes para Derivadas

Série termo a termo com digamma/poligamma e diferenças finitas centrais.
Não usa o motor de derivadas; compartilha apenas funções especiais e o
mesmo truncamento por camadas do avaliador.
"""
import math
from functools import lru_cache
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from config.settings import settings
from core.derivatives.engine import differentiate
from core.errors import HornError
from core.evaluator import CompiledSeries, evaluate, evaluate_expansion, prefactor_value, sum_shells
from core.schemas import (
    EvalOptions,
    EvalResult,
    GammaRatioAtom,
    HornSeries,
    ParamLinearAtom,
    with_parameter,
)
from core.special_math import polygamma
from utils.logger import log_step_complete, log_step_start


@lru_cache(maxsize=1 << 16)
def _psi(k: int, z: float) -> float:
    return polygamma(k, z)


# ============================================
# DERIVADAS LOGARÍTMICAS
# ============================================

def _occurrences(series: HornSeries, slopes: dict[str, float]) -> list[tuple[float, tuple[int, ...], int, float]]:
    # (base, coeffs, sinal, slope) de cada fator cujo parâmetro tem slope
    values = series.param_values
    return [
        (f.base(values), f.coeffs, f.sign, slopes[f.param])
        for f in series.factors
        if f.param in slopes and any(f.coeffs)
    ]


def _prefactor_log_derivative(series: HornSeries, slopes: dict[str, float], j: int) -> float:
    """j-ésima derivada em ε de ln|prefator|, com p(ε) = p + c ε"""
    values = series.param_values
    parts = []
    for atom in series.prefactor:
        if isinstance(atom, ParamLinearAtom) and atom.param in slopes:
            c = slopes[atom.param]
            w = values[atom.param] + atom.offset
            parts.append(atom.exponent * c ** j * (-1) ** (j - 1) * math.factorial(j - 1) / w ** j)
        elif isinstance(atom, GammaRatioAtom) and atom.param in slopes:
            c = slopes[atom.param]
            p = values[atom.param]
            parts.append(c ** j * (_psi(j - 1, p + atom.offset_numerator) - _psi(j - 1, p + atom.offset_denominator)))
    return math.fsum(parts)


def _term_log_derivative(occurrences, idx: Sequence[int], j: int) -> float:
    parts = []
    for z, q, s, c in occurrences:
        n = sum(qi * ii for qi, ii in zip(q, idx))
        if n == 0:
            continue
        parts.append(s * c ** j * (_psi(j - 1, z + n) - _psi(j - 1, z)))
    return math.fsum(parts)


# ============================================
# ORÁCULO DIGAMMA
# ============================================

def digamma_derivative(series: HornSeries, param_name: str, opts: Optional[EvalOptions] = None) -> EvalResult:
    """
    ∂F/∂param somando termo·Σ_occ s[ψ(z+q·n) - ψ(z)] camada a camada

    Args:
        series: Série válida
        param_name: Parâmetro a derivar
        opts: Mesmo truncamento do avaliador

    Returns:
        EvalResult da série derivada

    Raises:
        UnknownParameterError: Parâmetro inexistente
        PoleError: Argumento de ψ em polo
    """
    series.get_parameter(param_name)
    return epsilon_coefficient_oracle(series, 1, opts, slopes={param_name: 1.0})


def epsilon_coefficient_oracle(
    series: HornSeries,
    k: int,
    opts: Optional[EvalOptions] = None,
    slopes: Optional[dict[str, float]] = None,
) -> EvalResult:
    """
    Coeficiente de ε^k termo a termo (polinômios de Bell completos)

    Com L_j = d^j/dε^j ln|termo|, a derivada t^(k) = t·Y_k(L_1..L_k) e
    Y_{n+1} = Σ_i C(n,i) Y_{n-i} L_{i+1}.

    Args:
        series: Série válida
        k: Ordem do coeficiente
        opts: Opções de truncamento
        slopes: Slopes a usar (default: epsilon_slope dos parâmetros)

    Returns:
        EvalResult do coeficiente (t^(k)/k! somado, vezes o prefator)
    """
    opts = opts or EvalOptions.from_settings()
    if k < 0:
        raise ValueError(f"Ordem deve ser >= 0, recebido {k}")
    if slopes is None:
        slopes = {p.name: p.epsilon_slope for p in series.parameters if p.epsilon_slope != 0.0}
    if k == 0:
        return evaluate(series, opts)

    compiled = CompiledSeries(series)
    occurrences = _occurrences(series, slopes)
    pref_derivs = [0.0] + [_prefactor_log_derivative(series, slopes, j) for j in range(1, k + 1)]
    scale = prefactor_value(series) / math.factorial(k)

    def term_fn(idx: tuple[int, ...]) -> float:
        t = compiled.term(idx)
        if t == 0.0:
            return 0.0
        logs = [0.0] + [
            _term_log_derivative(occurrences, idx, j) + pref_derivs[j] for j in range(1, k + 1)
        ]
        bell = [1.0]
        for n in range(k):
            bell.append(math.fsum(math.comb(n, i) * bell[n - i] * logs[i + 1] for i in range(n + 1)))
        return t * bell[k]

    return sum_shells(series, term_fn, opts, scale)


# ============================================
# DIFERENÇAS FINITAS
# ============================================

def _shifted(series: HornSeries, name: str, delta: float, opts: EvalOptions) -> EvalResult:
    value = series.get_parameter(name).value
    return evaluate(with_parameter(series, name, value + delta), opts)


def _central_difference_result(series: HornSeries, param_name: str, h: float, opts: EvalOptions) -> tuple[float, bool]:
    plus = _shifted(series, param_name, h, opts)
    minus = _shifted(series, param_name, -h, opts)
    return (plus.value - minus.value) / (2 * h), plus.converged and minus.converged


def central_difference(series: HornSeries, param_name: str, h: float, opts: Optional[EvalOptions] = None) -> float:
    """(F(p+h) - F(p-h)) / 2h"""
    opts = opts or EvalOptions.from_settings()
    return _central_difference_result(series, param_name, h, opts)[0]


def central_difference_mixed(
    series: HornSeries,
    p1: str,
    p2: str,
    h: float,
    opts: Optional[EvalOptions] = None,
) -> float:
    """
    Segunda derivada por diferenças centrais

    p1 == p2: (F(p+h) - 2F(p) + F(p-h)) / h²; senão estêncil de 4 pontos / 4h².
    """
    opts = opts or EvalOptions.from_settings()
    if p1 == p2:
        center = evaluate(series, opts).value
        plus = _shifted(series, p1, h, opts).value
        minus = _shifted(series, p1, -h, opts).value
        return (plus - 2 * center + minus) / (h * h)

    v1 = series.get_parameter(p1).value
    v2 = series.get_parameter(p2).value

    def at(d1: float, d2: float) -> float:
        shifted = with_parameter(with_parameter(series, p1, v1 + d1), p2, v2 + d2)
        return evaluate(shifted, opts).value

    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h)


def observed_order(
    series: HornSeries,
    param_name: str,
    steps: Sequence[float] = (4e-2, 2e-2, 1e-2),
    opts: Optional[EvalOptions] = None,
    noise: Optional[float] = None,
) -> list[float]:
    """
    Ordem observada das diferenças centrais sob divisão de h

    Soma todas as camadas até max_total_order nos dois lados e compara com o
    oráculo digamma no mesmo truncamento, isolando o erro do estêncil. Um par
    de passos em que algum erro fica abaixo do piso de arredondamento
    noise·max(1, |F|)/h não define ordem (nan).

    Args:
        series: Série válida
        param_name: Parâmetro
        steps: Passos decrescentes
        opts: Opções de avaliação (as tolerâncias são ignoradas)
        noise: Erro relativo de uma avaliação (default: VERIFY_ORDER_NOISE)

    Returns:
        ln(e_i / e_{i+1}) / ln(h_i / h_{i+1}) para cada par de passos consecutivos
    """
    opts = opts or EvalOptions.from_settings()
    noise = settings.VERIFY_ORDER_NOISE if noise is None else noise
    full = EvalOptions(
        max_total_order=opts.max_total_order,
        abs_tol=1e-300,
        rel_tol=1e-300,
        min_shells=opts.min_shells,
    )
    reference = digamma_derivative(series, param_name, full).value
    scale = noise * max(1.0, abs(evaluate(series, full).value))
    errors = [abs(central_difference(series, param_name, h, full) - reference) for h in steps]
    orders = []
    for e0, e1, h0, h1 in zip(errors, errors[1:], steps, steps[1:]):
        if e0 <= scale / h0 or e1 <= scale / h1:
            orders.append(math.nan)
        else:
            orders.append(math.log(e0 / e1) / math.log(h0 / h1))
    return orders


# ============================================
# VERIFICAÇÃO
# ============================================

class VerifyTolerances(BaseModel):
    """Tolerâncias do comando verify"""
    oracle_rel_tol: float = Field(default=1e-9, gt=0, description="|motor - oráculo| <= tol·max(1, |oráculo|)")
    finite_difference_abs_tol: float = Field(default=1e-6, gt=0)
    step: float = Field(default=1e-4, gt=0, description="Passo h das diferenças centrais")

    @classmethod
    def from_settings(cls) -> "VerifyTolerances":
        return cls(
            oracle_rel_tol=settings.VERIFY_ORACLE_REL_TOL,
            finite_difference_abs_tol=settings.VERIFY_FD_ABS_TOL,
            step=settings.VERIFY_FD_STEP,
        )


class VerificationReport(BaseModel):
    """Resultado da comparação motor × oráculo digamma × diferenças finitas"""
    model_config = ConfigDict(ser_json_inf_nan="strings")

    param: str
    engine: Optional[float] = None
    oracle: Optional[float] = None
    finite_difference: Optional[float] = None
    deviations: dict[str, float] = Field(default_factory=dict)
    member_count: int = 0
    converged: bool = False
    status: Literal["pass", "fail", "not_converged"] = "fail"
    failures: list[str] = Field(default_factory=list)


def verify(
    series: HornSeries,
    param_name: str,
    tolerances: Optional[VerifyTolerances] = None,
    opts: Optional[EvalOptions] = None,
) -> VerificationReport:
    """
    Roda os três métodos e compara

    Erros viram entradas em failures; pontos sem convergência recebem
    status not_converged em vez de fail.

    Args:
        series: Série a verificar
        param_name: Parâmetro
        tolerances: Tolerâncias (default: configuração)
        opts: Opções de avaliação

    Returns:
        VerificationReport
    """
    tolerances = tolerances or VerifyTolerances.from_settings()
    opts = opts or EvalOptions.from_settings()
    report = VerificationReport(param=param_name)
    converged = []
    log_step_start("verify", param_name)

    try:
        expansion = differentiate(series, param_name)
        report.member_count = len(expansion.terms)
        engine = evaluate_expansion(expansion, opts)
        report.engine = engine.value
        converged.append(engine.converged)
    except HornError as e:
        report.failures.append(f"motor: {e}")

    try:
        oracle = digamma_derivative(series, param_name, opts)
        report.oracle = oracle.value
        converged.append(oracle.converged)
    except HornError as e:
        report.failures.append(f"oráculo digamma: {e}")

    try:
        fd, fd_converged = _central_difference_result(series, param_name, tolerances.step, opts)
        report.finite_difference = fd
        converged.append(fd_converged)
    except HornError as e:
        report.failures.append(f"diferenças finitas: {e}")

    report.converged = bool(converged) and all(converged)

    if report.engine is not None and report.oracle is not None:
        dev = abs(report.engine - report.oracle)
        report.deviations["engine_vs_oracle"] = dev
        if not dev <= tolerances.oracle_rel_tol * max(1.0, abs(report.oracle)):
            report.failures.append(f"motor × oráculo: desvio {dev:.3e}")
    if report.finite_difference is not None:
        for label, value in (("engine", report.engine), ("oracle", report.oracle)):
            if value is None:
                continue
            dev = abs(value - report.finite_difference)
            report.deviations[f"{label}_vs_finite_difference"] = dev
            if not dev <= tolerances.finite_difference_abs_tol:
                report.failures.append(f"{label} × diferenças finitas: desvio {dev:.3e}")

    raised = any(f.startswith(("motor:", "oráculo digamma:", "diferenças finitas:")) for f in report.failures)
    if raised:
        report.status = "fail"
    elif not report.converged:
        report.status = "not_converged"
    elif report.failures:
        report.status = "fail"
    else:
        report.status = "pass"

    log_step_complete("verify", f"{param_name}: {report.status}")
    return report
