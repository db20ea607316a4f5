# ========================================
# utils/__init__.py
# ========================================
"""
Módulo de Utilitários
"""
from .logger import (
    get_logger,
    log_step_start,
    log_step_complete,
    log_step_error,
    log_validation,
    log_evaluation
)
from .validators import (
    Violation,
    validate,
    validate_series,
    ensure_valid,
    is_exceptional
)

__all__ = [
    "get_logger",
    "log_step_start",
    "log_step_complete",
    "log_step_error",
    "log_validation",
    "log_evaluation",
    "Violation",
    "validate",
    "validate_series",
    "ensure_valid",
    "is_exceptional",
]
