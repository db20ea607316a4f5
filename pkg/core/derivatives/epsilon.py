"""
Expansão em ε

Com a_i(ε) = a_i + c_i ε, o coeficiente de ε^k é
Σ_{|α|=k} c^α/α! ∂^α F (regra da cadeia multinomial).
"""
import math
from fractions import Fraction
from itertools import product
from typing import Iterator, List

from core.derivatives.engine import differentiate_n
from core.schemas import ConstAtom, DerivativeExpansion, HornSeries


def exact_slope(value: float) -> Fraction:
    """Slope como racional exato da sua representação decimal"""
    return Fraction(repr(float(value)))


def multi_indices(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Multi-índices α de n entradas com |α| = total, em ordem lexicográfica"""
    for alpha in product(range(total + 1), repeat=n):
        if sum(alpha) == total:
            yield alpha


def multinomial_weight(slopes: List[Fraction], alpha: tuple[int, ...]) -> Fraction:
    weight = Fraction(1)
    for c, a in zip(slopes, alpha):
        weight *= c ** a / math.factorial(a)
    return weight


def epsilon_expand(series: HornSeries, order: int) -> List[DerivativeExpansion]:
    """
    Coeficientes 0..order da expansão em ε

    Args:
        series: Série válida em ε = 0, com epsilon_slope nos parâmetros
        order: Maior potência K de ε

    Returns:
        Lista de K+1 expansões; a de índice 0 é [series], as demais ficam
        vazias quando todos os slopes são nulos

    Raises:
        ValueError: Ordem negativa
        PoleError: Valor excepcional de parâmetro
    """
    if order < 0:
        raise ValueError(f"Ordem da expansão em ε deve ser >= 0, recebido {order}")

    active = [p for p in series.parameters if p.epsilon_slope != 0.0]
    names = [p.name for p in active]
    slopes = [exact_slope(p.epsilon_slope) for p in active]

    coefficients = [DerivativeExpansion(terms=(series,))]
    for k in range(1, order + 1):
        members: List[HornSeries] = []
        if names:
            for alpha in multi_indices(len(names), k):
                weight = multinomial_weight(slopes, alpha)
                if weight == 0:
                    continue
                expansion = differentiate_n(series, dict(zip(names, alpha)))
                for m in expansion.terms:
                    if weight != 1:
                        m = m.model_copy(update={"prefactor": m.prefactor + (ConstAtom.of(weight),)})
                    members.append(m)
        coefficients.append(DerivativeExpansion(terms=tuple(members)))
    return coefficients
