# ========================================
# core/__init__.py
# ========================================
"""
Módulo Core - Modelo de Séries, Avaliação e Derivadas
"""
from .errors import (
    HornError,
    PoleError,
    UnknownParameterError,
    ArityError,
    SeriesValidationError,
    NotConvergedError,
    SpecFormatError
)
from .schemas import (
    HornSeries,
    Variable,
    Parameter,
    PochhammerFactor,
    ConstAtom,
    VarPowerAtom,
    ParamLinearAtom,
    GammaRatioAtom,
    DerivativeExpansion,
    EvalOptions,
    EvalResult,
    with_parameter,
    with_slopes,
    swap_values,
    pad_variable,
    series_to_json,
    series_from_json,
    expansion_to_json,
    expansion_from_json
)
from .special_math import (
    SignedLog,
    log_gamma,
    digamma,
    trigamma,
    polygamma,
    pochhammer,
    pochhammer_value
)

__all__ = [
    # Erros
    "HornError",
    "PoleError",
    "UnknownParameterError",
    "ArityError",
    "SeriesValidationError",
    "NotConvergedError",
    "SpecFormatError",
    # Modelo
    "HornSeries",
    "Variable",
    "Parameter",
    "PochhammerFactor",
    "ConstAtom",
    "VarPowerAtom",
    "ParamLinearAtom",
    "GammaRatioAtom",
    "DerivativeExpansion",
    "EvalOptions",
    "EvalResult",
    "with_parameter",
    "with_slopes",
    "swap_values",
    "pad_variable",
    "series_to_json",
    "series_from_json",
    "expansion_to_json",
    "expansion_from_json",
    # Funções especiais
    "SignedLog",
    "log_gamma",
    "digamma",
    "trigamma",
    "polygamma",
    "pochhammer",
    "pochhammer_value",
]
