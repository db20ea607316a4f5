# ========================================
# core/derivatives/__init__.py
# ========================================
"""
Módulo de Derivadas nos Parâmetros
"""
from .occurrence import (
    Branch,
    OccurrenceDerivative,
    prefactor_members
)
from .engine import (
    occurrences_of,
    differentiate,
    differentiate_n
)
from .epsilon import (
    epsilon_expand,
    exact_slope,
    multi_indices
)

__all__ = [
    "Branch",
    "OccurrenceDerivative",
    "prefactor_members",
    "occurrences_of",
    "differentiate",
    "differentiate_n",
    "epsilon_expand",
    "exact_slope",
    "multi_indices",
]
