"""
Leitura de Documentos JSON de Séries

Três formatos aceitos: série completa (horn-series/1), expansão
(horn-expansion/1) e a forma abreviada do catálogo. Erros de sintaxe
saem com linha/coluna; erros de estrutura com o caminho do campo.
"""
import json
import sys
from pathlib import Path
from typing import Any, Union

from jsonschema import Draft7Validator
from pydantic import ValidationError

from core.catalog import CatalogSpec, build
from core.errors import SpecFormatError
from core.schemas import (
    EXPANSION_SCHEMA,
    SERIES_SCHEMA,
    DerivativeExpansion,
    HornSeries,
)

# ============================================
# JSON SCHEMAS
# ============================================

_REAL = {"type": ["number", "string"]}
_INT = {"type": "integer"}
_NAME = {"type": "string", "pattern": "^[A-Za-z_][A-Za-z0-9_]*$"}

ATOM_JSON_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["const", "var_power", "param_linear", "gamma_ratio"]},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "const"}}},
            "then": {
                "required": ["numerator"],
                "properties": {"numerator": _INT, "denominator": _INT},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "var_power"}}},
            "then": {
                "required": ["var", "exponent"],
                "properties": {"var": {"type": "integer", "minimum": 0}, "exponent": _INT},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "param_linear"}}},
            "then": {
                "required": ["param", "offset", "exponent"],
                "properties": {"param": _NAME, "offset": _INT, "exponent": {"enum": [1, -1]}},
            },
        },
        {
            "if": {"properties": {"kind": {"const": "gamma_ratio"}}},
            "then": {
                "required": ["param", "offset_numerator", "offset_denominator"],
                "properties": {"param": _NAME, "offset_numerator": _INT, "offset_denominator": _INT},
            },
        },
    ],
}

SERIES_JSON_SCHEMA = {
    "type": "object",
    "required": ["variables"],
    "properties": {
        "schema": {"const": SERIES_SCHEMA},
        "variables": {
            "type": "array",
            "items": {"type": "object", "required": ["value"], "properties": {"value": _REAL}},
        },
        "parameters": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "value"],
                "properties": {"name": _NAME, "value": _REAL, "epsilon_slope": _REAL},
            },
        },
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeffs", "placement"],
                "properties": {
                    "param": {"anyOf": [_NAME, {"type": "null"}]},
                    "coeffs": {"type": "array", "items": _INT},
                    "placement": {"enum": ["numerator", "denominator"]},
                    "shift": _INT,
                },
            },
        },
        "prefactor": {"type": "array", "items": ATOM_JSON_SCHEMA},
    },
}

EXPANSION_JSON_SCHEMA = {
    "type": "object",
    "required": ["schema", "terms"],
    "properties": {
        "schema": {"const": EXPANSION_SCHEMA},
        "terms": {"type": "array", "items": SERIES_JSON_SCHEMA},
    },
}

CATALOG_JSON_SCHEMA = {
    "type": "object",
    "required": ["catalog", "vars"],
    "properties": {
        "catalog": {"type": "string"},
        "params": {
            "anyOf": [
                {"type": "array", "items": _REAL},
                {"type": "object", "additionalProperties": _REAL},
            ]
        },
        "vars": {"type": "array", "items": _REAL},
        "slopes": {"type": "object", "additionalProperties": _REAL},
        "p": {"type": "integer", "minimum": 0},
        "q": {"type": "integer", "minimum": 0},
        "layout": {"type": "object"},
    },
}


# ============================================
# LEITURA
# ============================================

def read_spec_argument(arg: str) -> str:
    """
    Texto do documento a partir do argumento da CLI

    Args:
        arg: Caminho, '-' para stdin ou JSON inline (começando com '{')

    Raises:
        SpecFormatError: Arquivo inexistente ou ilegível
    """
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    path = Path(arg)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise SpecFormatError(f"Não foi possível ler '{arg}': {e.strerror or e}") from e


def parse_json_document(text: str) -> dict:
    """
    json.loads com posição do erro

    Raises:
        SpecFormatError: JSON malformado (com linha e coluna) ou raiz que não é objeto
    """
    if not text or not text.strip():
        raise SpecFormatError("Documento vazio")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFormatError(f"JSON malformado: {e.msg} na posição {e.pos}", e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise SpecFormatError(f"Raiz do documento deve ser objeto, recebido {type(data).__name__}")
    return data


def check_json_schema(data: Any, schema: dict) -> tuple[bool, list[str]]:
    """
    Valida contra um JSON Schema

    Returns:
        Tupla (is_valid, erros com caminho do campo)
    """
    validator = Draft7Validator(schema)
    errors = []
    for err in sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path)):
        path = "/".join(str(p) for p in err.absolute_path) or "<raiz>"
        errors.append(f"em '{path}': {err.message}")
    return len(errors) == 0, errors


def _require(data: dict, schema: dict) -> None:
    ok, errors = check_json_schema(data, schema)
    if not ok:
        raise SpecFormatError("Documento fora do esquema: " + "; ".join(errors))


def _model(model: Any, data: dict) -> Any:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        loc = "/".join(str(p) for p in first["loc"]) or "<raiz>"
        raise SpecFormatError(f"Documento inválido em '{loc}': {first['msg']}") from e


def document_kind(data: dict) -> str:
    """'catalog', 'expansion' ou 'series'"""
    if "catalog" in data:
        return "catalog"
    if data.get("schema") == EXPANSION_SCHEMA or "terms" in data:
        return "expansion"
    return "series"


def load_series_document(data: dict) -> HornSeries:
    """
    Série a partir de um documento já decodificado (completo ou abreviado)

    Raises:
        SpecFormatError: Estrutura inválida
        ArityError / UnknownParameterError / SeriesValidationError: Do catálogo
    """
    kind = document_kind(data)
    if kind == "catalog":
        _require(data, CATALOG_JSON_SCHEMA)
        return build(_model(CatalogSpec, data))
    if kind == "expansion":
        raise SpecFormatError("Esperada uma série, recebida uma expansão (horn-expansion/1)")
    _require(data, SERIES_JSON_SCHEMA)
    return _model(HornSeries, data)


def load_expansion_document(data: dict) -> DerivativeExpansion:
    """Expansão a partir de um documento já decodificado"""
    _require(data, EXPANSION_JSON_SCHEMA)
    return _model(DerivativeExpansion, data)


def load_document(text: str) -> Union[HornSeries, DerivativeExpansion]:
    """
    Série ou expansão a partir do texto

    Raises:
        SpecFormatError: JSON malformado ou fora do esquema
    """
    data = parse_json_document(text)
    if document_kind(data) == "expansion":
        return load_expansion_document(data)
    return load_series_document(data)
