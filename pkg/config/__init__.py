# ========================================
# config/__init__.py
# ========================================
"""
Módulo de Configuração
"""
from .settings import settings, get_settings, validate_minimum_config
from .catalog_config import (
    CATALOG,
    ACCEPTANCE_FUNCTIONS,
    CatalogEntry,
    get_catalog_names,
    get_entry,
    get_entries_by_family
)

__all__ = [
    "settings",
    "get_settings",
    "validate_minimum_config",
    "CATALOG",
    "ACCEPTANCE_FUNCTIONS",
    "CatalogEntry",
    "get_catalog_names",
    "get_entry",
    "get_entries_by_family",
]
