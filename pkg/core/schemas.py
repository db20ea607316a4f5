"""
Modelo de Dados das Séries de Horn

Séries do tipo Σ_n ∏ (a + s)_{q·n}^{±1} · ∏ x_r^{n_r}/n_r!, multiplicadas por
um prefator estruturado, e expansões de derivadas (listas finitas de séries).
"""
from fractions import Fraction
from typing import Annotated, Iterable, Literal, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    ValidationError,
    field_validator,
    model_validator,
)

from config.settings import get_settings
from core.errors import SpecFormatError, UnknownParameterError

SERIES_SCHEMA = "horn-series/1"
EXPANSION_SCHEMA = "horn-expansion/1"

# Reais viajam no JSON como string decimal de ida-e-volta exata (repr)
Real = Annotated[
    float,
    Field(allow_inf_nan=False),
    PlainSerializer(lambda v: repr(float(v)), return_type=str, when_used="json"),
]

Identifier = Annotated[str, Field(pattern=r"^[A-Za-z_][A-Za-z0-9_]*$")]

Placement = Literal["numerator", "denominator"]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)


# ============================================
# VARIÁVEIS E PARÂMETROS
# ============================================

class Variable(_Frozen):
    """Variável de soma com valor ligado x_r"""
    value: Real = Field(description="Valor ligado da variável")


class Parameter(_Frozen):
    """Parâmetro a(ε) = value + epsilon_slope·ε"""
    name: Identifier = Field(description="Nome único do parâmetro na série")
    value: Real = Field(description="Valor ligado em ε = 0")
    epsilon_slope: Real = Field(default=0.0, description="Coeficiente c em a(ε) = value + c·ε")


class PochhammerFactor(_Frozen):
    """
    Símbolo (param + shift)_{coeffs·n} no numerador ou denominador

    Com param None o fator é numérico puro: (shift)_{coeffs·n}.
    """
    param: Optional[Identifier] = Field(default=None, description="Parâmetro da base ou None")
    coeffs: tuple[int, ...] = Field(description="Coeficiente inteiro q_r por índice de soma")
    placement: Placement = Field(description="numerator | denominator")
    shift: int = Field(default=0, description="Deslocamento inteiro somado à base")

    @property
    def sign(self) -> int:
        return 1 if self.placement == "numerator" else -1

    def base(self, values: dict[str, float]) -> float:
        """Valor numérico da base (param + shift)"""
        if self.param is None:
            return float(self.shift)
        return values[self.param] + self.shift


# ============================================
# ÁTOMOS DO PREFATOR
# ============================================

class ConstAtom(_Frozen):
    """Constante racional numerator/denominator"""
    kind: Literal["const"] = "const"
    numerator: int
    denominator: int = 1

    @field_validator("denominator")
    @classmethod
    def _nonzero(cls, v: int) -> int:
        if v == 0:
            raise ValueError("denominador da constante não pode ser zero")
        return v

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @classmethod
    def of(cls, value: Union[Fraction, int]) -> "ConstAtom":
        value = Fraction(value)
        return cls(numerator=value.numerator, denominator=value.denominator)


class VarPowerAtom(_Frozen):
    """x_var ** exponent"""
    kind: Literal["var_power"] = "var_power"
    var: int = Field(ge=0)
    exponent: int


class ParamLinearAtom(_Frozen):
    """(param + offset) ** exponent, exponent em {+1, -1}"""
    kind: Literal["param_linear"] = "param_linear"
    param: Identifier
    offset: int
    exponent: Literal[1, -1]


class GammaRatioAtom(_Frozen):
    """Γ(param + offset_numerator) / Γ(param + offset_denominator)"""
    kind: Literal["gamma_ratio"] = "gamma_ratio"
    param: Identifier
    offset_numerator: int
    offset_denominator: int


PrefactorAtom = Annotated[
    Union[ConstAtom, VarPowerAtom, ParamLinearAtom, GammaRatioAtom],
    Field(discriminator="kind"),
]


# ============================================
# SÉRIE E EXPANSÃO
# ============================================

class HornSeries(_Frozen):
    """Série de Horn com parâmetros ligados e prefator estruturado"""
    schema_version: Literal["horn-series/1"] = Field(default=SERIES_SCHEMA, alias="schema")
    variables: tuple[Variable, ...] = Field(description="Variáveis x_r (uma por índice)")
    parameters: tuple[Parameter, ...] = Field(default=(), description="Parâmetros ligados")
    factors: tuple[PochhammerFactor, ...] = Field(default=(), description="Símbolos de Pochhammer")
    prefactor: tuple[PrefactorAtom, ...] = Field(default=(), description="Produto de átomos")

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    @property
    def x_values(self) -> tuple[float, ...]:
        return tuple(v.value for v in self.variables)

    @property
    def param_names(self) -> list[str]:
        return [p.name for p in self.parameters]

    @property
    def param_values(self) -> dict[str, float]:
        return {p.name: p.value for p in self.parameters}

    def get_parameter(self, name: str) -> Parameter:
        """
        Busca parâmetro pelo nome

        Raises:
            UnknownParameterError: Se não existir
        """
        for p in self.parameters:
            if p.name == name:
                return p
        raise UnknownParameterError(name, self.param_names)

    def occurrences(self, name: str) -> list[int]:
        """Índices dos fatores cuja base é o parâmetro"""
        return [i for i, f in enumerate(self.factors) if f.param == name]


class DerivativeExpansion(_Frozen):
    """Soma finita de séries de Horn (cada uma com seu prefator)"""
    schema_version: Literal["horn-expansion/1"] = Field(default=EXPANSION_SCHEMA, alias="schema")
    terms: tuple[HornSeries, ...] = Field(default=())

    def __len__(self) -> int:
        return len(self.terms)


# ============================================
# OPÇÕES E RESULTADO DE AVALIAÇÃO
# ============================================

class EvalOptions(_Frozen):
    """Truncamento por camadas e tolerâncias"""
    max_total_order: int = Field(default=60, ge=1, description="Maior grau total somado")
    abs_tol: float = Field(default=1e-12, gt=0)
    rel_tol: float = Field(default=1e-12, gt=0)
    min_shells: int = Field(default=8, ge=1, description="Camadas consecutivas abaixo da tolerância")

    @model_validator(mode="after")
    def _order_covers_shells(self) -> "EvalOptions":
        if self.max_total_order < self.min_shells:
            raise ValueError(
                f"max_total_order ({self.max_total_order}) deve ser >= min_shells ({self.min_shells})"
            )
        return self

    @classmethod
    def from_settings(cls, **overrides) -> "EvalOptions":
        """Defaults vindos da configuração (HORN_EVAL_*), com sobrescritas opcionais"""
        cfg = get_settings()
        data = {
            "max_total_order": cfg.HORN_EVAL_MAX_ORDER,
            "abs_tol": cfg.HORN_EVAL_ABS_TOL,
            "rel_tol": cfg.HORN_EVAL_REL_TOL,
            "min_shells": cfg.HORN_EVAL_MIN_SHELLS,
        }
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)


class EvalResult(BaseModel):
    """Resultado de uma soma truncada"""
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")

    value: float
    tail_estimate: float
    shells_used: int
    terms_used: int
    converged: bool


# ============================================
# OPERAÇÕES SOBRE SÉRIES
# ============================================

def with_parameter(series: HornSeries, name: str, new_value: float) -> HornSeries:
    """
    Cópia da série com o parâmetro religado

    Raises:
        UnknownParameterError: Se o parâmetro não existir
    """
    series.get_parameter(name)
    params = tuple(
        p.model_copy(update={"value": float(new_value)}) if p.name == name else p
        for p in series.parameters
    )
    return series.model_copy(update={"parameters": params})


def with_slopes(series: HornSeries, slopes: dict[str, float]) -> HornSeries:
    """
    Cópia da série com novos coeficientes ε

    Raises:
        UnknownParameterError: Se algum nome não existir
    """
    for name in slopes:
        series.get_parameter(name)
    params = tuple(
        p.model_copy(update={"epsilon_slope": float(slopes[p.name])}) if p.name in slopes else p
        for p in series.parameters
    )
    return series.model_copy(update={"parameters": params})


def swap_values(
    series: HornSeries,
    param_pairs: Iterable[tuple[str, str]] = (),
    var_pairs: Iterable[tuple[int, int]] = (),
) -> HornSeries:
    """
    Troca valores ligados de pares de parâmetros e de variáveis (regra de troca)

    A estrutura (fatores, nomes) é preservada; só os valores mudam de lugar.
    """
    values = series.param_values
    for a, b in param_pairs:
        series.get_parameter(a)
        series.get_parameter(b)
        values[a], values[b] = values[b], values[a]
    xs = list(series.x_values)
    for i, j in var_pairs:
        xs[i], xs[j] = xs[j], xs[i]
    params = tuple(p.model_copy(update={"value": values[p.name]}) for p in series.parameters)
    variables = tuple(Variable(value=x) for x in xs)
    return series.model_copy(update={"parameters": params, "variables": variables})


def pad_variable(series: HornSeries) -> HornSeries:
    """Acrescenta variável inerte (valor 0, coeficiente 0 em todos os fatores)"""
    factors = tuple(
        f.model_copy(update={"coeffs": f.coeffs + (0,)}) for f in series.factors
    )
    return series.model_copy(
        update={"variables": series.variables + (Variable(value=0.0),), "factors": factors}
    )


# ============================================
# SERIALIZAÇÃO
# ============================================

def series_to_json(series: HornSeries, indent: Optional[int] = None) -> str:
    return series.model_dump_json(by_alias=True, indent=indent)


def expansion_to_json(expansion: DerivativeExpansion, indent: Optional[int] = None) -> str:
    return expansion.model_dump_json(by_alias=True, indent=indent)


def _load(model: type[BaseModel], text: str) -> BaseModel:
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        loc = ".".join(str(p) for p in first["loc"]) or "<raiz>"
        raise SpecFormatError(f"Documento inválido em '{loc}': {first['msg']}") from e


def series_from_json(text: str) -> HornSeries:
    """
    Carrega série de um documento horn-series/1

    Raises:
        SpecFormatError: Se o documento não respeitar o modelo
    """
    return _load(HornSeries, text)


def expansion_from_json(text: str) -> DerivativeExpansion:
    """Carrega expansão de um documento horn-expansion/1"""
    return _load(DerivativeExpansion, text)
