"""
Derivadas nos Parâmetros como Somas Finitas de Séries de Horn
"""
from typing import List, Mapping

from core.derivatives.occurrence import OccurrenceDerivative, prefactor_members
from core.schemas import DerivativeExpansion, HornSeries
from utils.logger import log_step_complete, log_step_start


def occurrences_of(series: HornSeries, param_name: str) -> List[OccurrenceDerivative]:
    """Ocorrências do parâmetro nos fatores, na ordem dos fatores"""
    series.get_parameter(param_name)
    return [OccurrenceDerivative.from_factor(series, i) for i in series.occurrences(param_name)]


def differentiate(series: HornSeries, param_name: str) -> DerivativeExpansion:
    """
    ∂F/∂param como expansão em séries de φ+1 variáveis

    Regra do produto sobre todas as ocorrências do parâmetro (na ordem
    dos fatores, depois ξ e γ crescentes), seguida das parcelas vindas dos
    átomos do prefator que dependem do parâmetro.

    Args:
        series: Série válida
        param_name: Parâmetro a derivar

    Returns:
        DerivativeExpansion (vazia se o parâmetro não aparece)

    Raises:
        UnknownParameterError: Parâmetro inexistente
        PoleError: Valor excepcional do parâmetro
    """
    members: List[HornSeries] = []
    for occ in occurrences_of(series, param_name):
        members.extend(occ.build_members(series))
    members.extend(prefactor_members(series, param_name))
    return DerivativeExpansion(terms=tuple(members))


def differentiate_n(series: HornSeries, orders: Mapping[str, int]) -> DerivativeExpansion:
    """
    Derivada de ordem total N = Σ orders, distribuída sobre os membros

    Args:
        series: Série válida
        orders: Mapa nome -> ordem (aplicado na ordem de iteração)

    Returns:
        Expansão com membros de φ+N variáveis; N = 0 devolve [series]

    Raises:
        UnknownParameterError: Nome inexistente
        ValueError: Ordem negativa
    """
    for name, k in orders.items():
        series.get_parameter(name)
        if int(k) != k or k < 0:
            raise ValueError(f"Ordem de derivada inválida para '{name}': {k}")

    log_step_start("differentiate_n", dict(orders))
    current: List[HornSeries] = [series]
    for name, k in orders.items():
        for _ in range(int(k)):
            current = [m for s in current for m in differentiate(s, name).terms]
    log_step_complete("differentiate_n", f"{len(current)} membros")
    return DerivativeExpansion(terms=tuple(current))
