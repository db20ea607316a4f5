"""
Validação Estrutural e Numérica de Séries
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from config.settings import settings
from core.errors import PoleError, SeriesValidationError
from core.schemas import (
    GammaRatioAtom,
    HornSeries,
    ParamLinearAtom,
    VarPowerAtom,
)
from core.special_math import is_gamma_pole, nearest_integer, pochhammer


class Violation(BaseModel):
    """Uma violação encontrada por validate()"""
    code: str = Field(description="Código estável da violação")
    message: str = Field(description="Descrição legível")
    location: str = Field(default="", description="Caminho do elemento na série")


def _check_parameters(series: HornSeries) -> List[Violation]:
    issues = []
    seen = set()
    for i, p in enumerate(series.parameters):
        if p.name in seen:
            issues.append(Violation(
                code="duplicate_parameter",
                message=f"Parâmetro '{p.name}' declarado mais de uma vez",
                location=f"parameters[{i}]",
            ))
        seen.add(p.name)
    return issues


def _check_factors(series: HornSeries, tol: float) -> List[Violation]:
    issues = []
    values = series.param_values
    for i, f in enumerate(series.factors):
        loc = f"factors[{i}]"
        if len(f.coeffs) != series.n_vars:
            issues.append(Violation(
                code="coefficient_arity_mismatch",
                message=(
                    f"Vetor de coeficientes com {len(f.coeffs)} entradas "
                    f"em série de {series.n_vars} variáveis"
                ),
                location=loc,
            ))
        if f.param is not None and f.param not in values:
            issues.append(Violation(
                code="unknown_parameter",
                message=f"Fator referencia parâmetro inexistente '{f.param}'",
                location=loc,
            ))
            continue

        z = f.base(values)
        r = nearest_integer(z, tol)
        if r is None:
            continue
        grows = any(q > 0 for q in f.coeffs)
        shrinks = any(q < 0 for q in f.coeffs)
        # (z)_N = 0 para N > -z com z inteiro <= 0; no denominador vira polo
        if f.placement == "denominator" and r <= 0 and grows:
            issues.append(Violation(
                code="denominator_pole",
                message=f"Parâmetro do denominador em polo: base {z!r} atingível por índice positivo",
                location=loc,
            ))
        # (z)_N com N <= -z e z inteiro positivo cruza zero no produto descendente
        if f.placement == "numerator" and r >= 1 and shrinks:
            issues.append(Violation(
                code="numerator_pole",
                message=f"Parâmetro do numerador em polo: base {z!r} atingível por índice negativo",
                location=loc,
            ))
    return issues


def _check_prefactor(series: HornSeries, tol: float) -> List[Violation]:
    issues = []
    values = series.param_values
    for i, atom in enumerate(series.prefactor):
        loc = f"prefactor[{i}]"
        if isinstance(atom, VarPowerAtom):
            if atom.var >= series.n_vars:
                issues.append(Violation(
                    code="var_power_out_of_range",
                    message=f"Variável {atom.var} inexistente (série tem {series.n_vars})",
                    location=loc,
                ))
            elif atom.exponent < 0 and series.x_values[atom.var] == 0.0:
                issues.append(Violation(
                    code="var_power_pole",
                    message=f"Potência negativa da variável {atom.var} ligada a zero",
                    location=loc,
                ))
            continue
        if isinstance(atom, (ParamLinearAtom, GammaRatioAtom)) and atom.param not in values:
            issues.append(Violation(
                code="unknown_parameter",
                message=f"Átomo referencia parâmetro inexistente '{atom.param}'",
                location=loc,
            ))
            continue
        if isinstance(atom, ParamLinearAtom):
            if atom.exponent == -1 and abs(values[atom.param] + atom.offset) <= tol:
                issues.append(Violation(
                    code="param_linear_pole",
                    message=f"Inverso de ({atom.param}{atom.offset:+d}) é singular",
                    location=loc,
                ))
        elif isinstance(atom, GammaRatioAtom):
            z = values[atom.param] + atom.offset_denominator
            try:
                pochhammer(z, atom.offset_numerator - atom.offset_denominator, tol)
            except PoleError:
                issues.append(Violation(
                    code="gamma_ratio_pole",
                    message=(
                        f"Γ({atom.param}{atom.offset_numerator:+d})/Γ({atom.param}"
                        f"{atom.offset_denominator:+d}) singular nos valores ligados"
                    ),
                    location=loc,
                ))
    return issues


def validate(series: HornSeries, tol: Optional[float] = None) -> List[Violation]:
    """
    Verifica a boa formação da série

    Checa aridade dos coeficientes, nomes de parâmetros, polos atingíveis
    dos fatores e átomos singulares do prefator. Nunca lança exceção.

    Args:
        series: Série a validar
        tol: Tolerância de polo (default: settings.POLE_TOLERANCE)

    Returns:
        Lista de violações (vazia quando a série é válida)
    """
    tol = settings.POLE_TOLERANCE if tol is None else tol
    issues = []
    issues.extend(_check_parameters(series))
    issues.extend(_check_factors(series, tol))
    issues.extend(_check_prefactor(series, tol))
    return issues


def validate_series(series: HornSeries) -> Tuple[bool, List[str]]:
    """
    Versão resumida de validate()

    Returns:
        Tupla (is_valid, mensagens)
    """
    issues = validate(series)
    return (len(issues) == 0, [f"{v.code}: {v.message}" for v in issues])


def ensure_valid(series: HornSeries) -> HornSeries:
    """
    Devolve a própria série se válida

    Raises:
        SeriesValidationError: Com todas as violações encontradas
    """
    issues = validate(series)
    if issues:
        raise SeriesValidationError(issues)
    return series


def is_exceptional(value: float, tol: Optional[float] = None) -> bool:
    """True se o valor for um inteiro não positivo (valor excepcional de parâmetro)"""
    return is_gamma_pole(value, tol)
